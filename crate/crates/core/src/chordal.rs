//! Component jumping when every component has the same size.
//!
//! The CC-Piran graph is the bipartite graph between the components only
//! in the source and the components only in the target, joined when they
//! touch. When it is a forest, some target component touches at most one
//! remaining source component; jumping that source component (or any free
//! one) onto it never collides with anything. Chordal graphs always yield a
//! forest.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::ComponentMove;
use crate::solution::{reason, Solution};

/// Bipartite touch graph between `C(A) \ C(B)` and `C(B) \ C(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcPiranGraph {
    pub a_side: Vec<Vec<usize>>,
    pub b_side: Vec<Vec<usize>>,
    /// `(i, j)`: `a_side[i]` touches `b_side[j]`. Sorted, no duplicates.
    pub edges: Vec<(usize, usize)>,
}

/// Builds the CC-Piran graph in two passes: label the exclusive components,
/// then scan the adjacency lists of the source-side vertices.
pub fn build_cc_piran(g: &Graph, a: &Configuration, b: &Configuration) -> CcPiranGraph {
    let a_side: Vec<Vec<usize>> = a
        .components_not_in(b)
        .into_iter()
        .map(<[usize]>::to_vec)
        .collect();
    let b_side: Vec<Vec<usize>> = b
        .components_not_in(a)
        .into_iter()
        .map(<[usize]>::to_vec)
        .collect();

    let mut b_label = vec![usize::MAX; g.n()];
    for (j, comp) in b_side.iter().enumerate() {
        comp.iter().for_each(|&v| b_label[v] = j);
    }
    let mut edges = Vec::new();
    for (i, comp) in a_side.iter().enumerate() {
        for &v in comp {
            if b_label[v] != usize::MAX {
                edges.push((i, b_label[v]));
            }
            for &w in g.neighbors(v) {
                if b_label[w] != usize::MAX {
                    edges.push((i, b_label[w]));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    CcPiranGraph {
        a_side,
        b_side,
        edges,
    }
}

impl CcPiranGraph {
    /// Whether the graph has no cycle. For a bipartite graph this is the
    /// same as having no even hole.
    pub fn is_forest(&self) -> bool {
        let offset = self.a_side.len();
        let mut parent: Vec<usize> = (0..offset + self.b_side.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j) in &self.edges {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, offset + j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
        true
    }

    /// Greedy matching of source to target components along a forest:
    /// repeatedly take the lowest-index target component with at most one
    /// remaining neighbour and jump that neighbour (or the lowest-index
    /// remaining source component) onto it. `None` if the graph is not a
    /// forest and the greedy gets stuck.
    fn greedy_moves(&self) -> Option<Vec<ComponentMove>> {
        let (na, nb) = (self.a_side.len(), self.b_side.len());
        let mut a_adj = vec![Vec::new(); na];
        let mut degree = vec![0usize; nb];
        for &(i, j) in &self.edges {
            a_adj[i].push(j);
            degree[j] += 1;
        }
        let mut b_adj = vec![Vec::new(); nb];
        for &(i, j) in &self.edges {
            b_adj[j].push(i);
        }
        let mut a_alive = vec![true; na];
        let mut b_alive = vec![true; nb];
        let mut free_a: BTreeSet<usize> = (0..na).collect();
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..nb).filter(|&j| degree[j] <= 1).map(Reverse).collect();

        let mut moves = Vec::with_capacity(na);
        while moves.len() < nb {
            let Reverse(v) = ready.pop()?;
            if !b_alive[v] {
                continue;
            }
            let w = match b_adj[v].iter().copied().find(|&i| a_alive[i]) {
                Some(i) => i,
                None => *free_a.iter().next()?,
            };
            b_alive[v] = false;
            a_alive[w] = false;
            free_a.remove(&w);
            for &j in &a_adj[w] {
                if b_alive[j] {
                    degree[j] -= 1;
                    if degree[j] == 1 {
                        ready.push(Reverse(j));
                    }
                }
            }
            moves.push(ComponentMove::new(
                self.a_side[w].clone(),
                self.b_side[v].clone(),
            ));
        }
        Some(moves)
    }
}

fn prepare(
    g: &Graph,
    a: &[usize],
    b: &[usize],
) -> Result<Result<(Configuration, Configuration), Solution>> {
    let a = Configuration::new(g, a.iter().copied())?;
    let b = Configuration::new(g, b.iter().copied())?;
    if a.multiset() != b.multiset() {
        return Ok(Err(Solution::no(reason::MULTISET_MISMATCH)));
    }
    if !a.multiset().is_empty() && a.multiset().uniform_size().is_none() {
        return Err(Error::WrongInstanceShape(format!(
            "components must all have the same size, got {}",
            a.multiset()
        )));
    }
    Ok(Ok((a, b)))
}

/// `CJ` with equal-size components on any graph. Answers `Yes` with a
/// shortest sequence when the CC-Piran graph is a forest and `Unknown`
/// otherwise; the forest condition is sufficient, not necessary.
pub fn solve_equal_size_cj(g: &Graph, a: &[usize], b: &[usize]) -> Result<Solution> {
    let (a, b) = match prepare(g, a, b)? {
        Ok(pair) => pair,
        Err(no) => return Ok(no),
    };
    let piran = build_cc_piran(g, &a, &b);
    if !piran.is_forest() {
        return Ok(Solution::unknown(reason::NOT_A_FOREST));
    }
    let moves = piran
        .greedy_moves()
        .ok_or_else(|| Error::InternalContradiction("greedy stalled on a forest".into()))?;
    Ok(Solution::yes(moves))
}

/// `CJ` with equal-size components on a chordal graph: always reconfigurable
/// when the multisets agree. `check_chordal` can be turned off for large
/// inputs already known to be chordal.
pub fn solve_chordal_cj(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    check_chordal: bool,
) -> Result<Solution> {
    if check_chordal && !g.is_chordal() {
        return Err(Error::WrongGraphClass("graph is not chordal".into()));
    }
    let (a, b) = match prepare(g, a, b)? {
        Ok(pair) => pair,
        Err(no) => return Ok(no),
    };
    let piran = build_cc_piran(g, &a, &b);
    if !piran.is_forest() {
        return Err(Error::InternalContradiction(
            "CC-Piran graph of a chordal input has a cycle".into(),
        ));
    }
    let moves = piran
        .greedy_moves()
        .ok_or_else(|| Error::InternalContradiction("greedy stalled on a forest".into()))?;
    Ok(Solution::yes(moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{verify_sequence, Rule};
    use crate::solution::Answer;

    fn conf(g: &Graph, vs: &[usize]) -> Configuration {
        Configuration::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn piran_examples() {
        let p7 = Graph::path(7);
        let a = conf(&p7, &[0, 1, 3, 4]);
        let empty = build_cc_piran(&p7, &a, &a);
        assert!(empty.a_side.is_empty() && empty.b_side.is_empty() && empty.is_forest());

        let b = conf(&p7, &[2, 3, 5, 6]);
        let piran = build_cc_piran(&p7, &a, &b);
        assert_eq!(piran.a_side, vec![vec![0, 1], vec![3, 4]]);
        assert_eq!(piran.b_side, vec![vec![2, 3], vec![5, 6]]);
        assert_eq!(piran.edges, vec![(0, 0), (1, 0), (1, 1)]);
        assert!(piran.is_forest());
    }

    #[test]
    fn four_cycle_is_not_a_forest() {
        let piran = CcPiranGraph {
            a_side: vec![vec![0], vec![1]],
            b_side: vec![vec![2], vec![3]],
            edges: vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        };
        assert!(!piran.is_forest());
    }

    #[test]
    fn greedy_on_p7() {
        let p7 = Graph::path(7);
        let sol = solve_equal_size_cj(&p7, &[0, 1, 3, 4], &[2, 3, 5, 6]).unwrap();
        assert_eq!(
            sol.moves,
            vec![
                ComponentMove::new(vec![3, 4], vec![5, 6]),
                ComponentMove::new(vec![0, 1], vec![2, 3]),
            ]
        );
        let seq = sol.sequence(&p7, Rule::CJ, &[0, 1, 3, 4]).unwrap().unwrap();
        let m = p7.cc_multiset(&[0, 1, 3, 4]).unwrap();
        assert_eq!(
            verify_sequence(&p7, &seq.vertex_sets(), &m, Rule::CJ).unwrap(),
            None
        );
        assert!(solve_chordal_cj(&p7, &[0, 1, 3, 4], &[2, 3, 5, 6], true)
            .unwrap()
            .is_yes());
    }

    #[test]
    fn identical_configurations() {
        let p7 = Graph::path(7);
        let sol = solve_equal_size_cj(&p7, &[0, 1], &[0, 1]).unwrap();
        assert!(sol.is_yes() && sol.moves.is_empty());
        assert!(solve_equal_size_cj(&p7, &[], &[]).unwrap().is_yes());
    }

    #[test]
    fn star_leaf_jump() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let sol = solve_chordal_cj(&star, &[1], &[2], true).unwrap();
        assert_eq!(sol.moves, vec![ComponentMove::new(vec![1], vec![2])]);
    }

    #[test]
    fn isolated_target_takes_lowest_free_source() {
        // two far-apart targets that touch nothing in the source
        let g = Graph::path(9);
        let sol = solve_equal_size_cj(&g, &[0, 2], &[6, 8]).unwrap();
        assert_eq!(sol.moves.len(), 2);
        let seq = sol.sequence(&g, Rule::CJ, &[0, 2]).unwrap().unwrap();
        let m = g.cc_multiset(&[0, 2]).unwrap();
        assert_eq!(
            verify_sequence(&g, &seq.vertex_sets(), &m, Rule::CJ).unwrap(),
            None
        );
    }

    #[test]
    fn cycle_gives_unknown() {
        // C4 with opposite pairs: A = {0, 2}, B = {1, 3}; every A vertex
        // touches every B vertex.
        let c4 = Graph::cycle(4);
        let sol = solve_equal_size_cj(&c4, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(
            (sol.answer, sol.reason),
            (Answer::Unknown, Some(reason::NOT_A_FOREST))
        );
        assert!(matches!(
            solve_chordal_cj(&c4, &[0, 2], &[1, 3], true),
            Err(Error::WrongGraphClass(_))
        ));
        assert!(matches!(
            solve_chordal_cj(&c4, &[0, 2], &[1, 3], false),
            Err(Error::InternalContradiction(_))
        ));
    }

    #[test]
    fn unequal_sizes_are_rejected() {
        let p6 = Graph::path(6);
        let err = solve_equal_size_cj(&p6, &[0, 1, 3], &[0, 2, 3]).unwrap_err();
        assert!(matches!(err, Error::WrongInstanceShape(_)));
        let sol = solve_equal_size_cj(&p6, &[0, 1], &[0, 2]).unwrap();
        assert_eq!(sol.reason, Some(reason::MULTISET_MISMATCH));
    }
}
