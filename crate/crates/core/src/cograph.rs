//! Component sliding on cographs.
//!
//! A cograph with at least two vertices is either disconnected or has a
//! disconnected complement. The solver walks the resulting cotree: across
//! connected components the subproblems are independent; inside a
//! connected node a single component can always be slid to its target in
//! closed form, while two or more components are trapped in one
//! co-component.

use std::collections::VecDeque;

use crate::config::{sorted_difference, Configuration};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::{ComponentMove, Rule};
use crate::solution::{reason, Solution};

/// A node of a cotree. `Union` children are the connected components of the
/// node's vertex set; `Join` children are its co-components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(Vec<CotreeNode>),
    Join(Vec<CotreeNode>),
}

impl CotreeNode {
    /// Vertices below this node, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            CotreeNode::Leaf(v) => out.push(*v),
            CotreeNode::Union(children) | CotreeNode::Join(children) => {
                children.iter().for_each(|c| c.collect(out))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Cotree(CotreeNode),
    /// `witness` induces a connected subgraph with a connected complement.
    NotACograph {
        witness: Vec<usize>,
    },
}

/// Recursive component / co-component split. The empty graph decomposes to
/// a childless `Union`.
pub fn decompose_cograph(g: &Graph) -> Decomposition {
    let all: Vec<usize> = (0..g.n()).collect();
    if all.is_empty() {
        return Decomposition::Cotree(CotreeNode::Union(Vec::new()));
    }
    match decompose_within(g, &all) {
        Ok(node) => Decomposition::Cotree(node),
        Err(witness) => Decomposition::NotACograph { witness },
    }
}

fn decompose_within(g: &Graph, set: &[usize]) -> std::result::Result<CotreeNode, Vec<usize>> {
    if let [v] = set {
        return Ok(CotreeNode::Leaf(*v));
    }
    let components = g
        .connected_components(set)
        .expect("cotree vertices are in range");
    if components.len() > 1 {
        let children = components
            .iter()
            .map(|c| decompose_within(g, c))
            .collect::<std::result::Result<_, _>>()?;
        return Ok(CotreeNode::Union(children));
    }
    let co = g.co_components_within(set);
    if co.len() > 1 {
        let children = co
            .iter()
            .map(|c| decompose_within(g, c))
            .collect::<std::result::Result<_, _>>()?;
        return Ok(CotreeNode::Join(children));
    }
    Err(set.to_vec())
}

pub fn is_cograph(g: &Graph) -> bool {
    matches!(decompose_cograph(g), Decomposition::Cotree(_))
}

fn cotree(g: &Graph) -> Result<CotreeNode> {
    match decompose_cograph(g) {
        Decomposition::Cotree(t) => Ok(t),
        Decomposition::NotACograph { witness } => Err(Error::WrongGraphClass(format!(
            "not a cograph: {witness:?} and its complement are both connected"
        ))),
    }
}

fn check_one_component_input(
    g: &Graph,
    x: &[usize],
    y: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    x.sort_unstable();
    x.dedup();
    y.sort_unstable();
    y.dedup();
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::InvalidInput(
            "expected non-empty sets of equal size".into(),
        ));
    }
    if !g.is_connected_set(&x)? || !g.is_connected_set(&y)? {
        return Err(Error::InvalidInput("both sets must be connected".into()));
    }
    if !g.is_connected() {
        return Err(Error::WrongGraphClass("graph must be connected".into()));
    }
    cotree(g)?;
    Ok((x, y))
}

/// Shortest `CS` sequence between two connected sets of equal size in a
/// connected cograph. Its length is 0, 1 (the sets touch) or 2.
pub fn cs_one_component(g: &Graph, x: &[usize], y: &[usize]) -> Result<Vec<ComponentMove>> {
    let (x, y) = check_one_component_input(g, x, y)?;
    let scope: Vec<usize> = (0..g.n()).collect();
    cs_within(g, &scope, &x, &y)
}

/// Shortest `CS1` sequence between two connected sets of equal size in a
/// connected cograph. Its length is `|X \ Y|` if the sets touch and
/// `|X \ Y| + 1` otherwise.
pub fn cs1_one_component(g: &Graph, x: &[usize], y: &[usize]) -> Result<Vec<ComponentMove>> {
    let (x, y) = check_one_component_input(g, x, y)?;
    let scope: Vec<usize> = (0..g.n()).collect();
    cs1_within(g, &scope, &x, &y)
}

fn touches(g: &Graph, x: &[usize], y: &[usize]) -> Result<bool> {
    let union: Vec<usize> = x.iter().chain(y).copied().collect();
    g.is_connected_set(&union)
}

fn cs_within(g: &Graph, scope: &[usize], x: &[usize], y: &[usize]) -> Result<Vec<ComponentMove>> {
    if x == y {
        return Ok(Vec::new());
    }
    if touches(g, x, y)? {
        return Ok(vec![ComponentMove::new(x.to_vec(), y.to_vec())]);
    }
    let mut in_scope = vec![false; g.n()];
    scope.iter().for_each(|&v| in_scope[v] = true);
    let hub = scope
        .iter()
        .copied()
        .find(|&z| {
            let adjacent_to =
                |set: &[usize]| g.neighbors(z).iter().any(|w| set.binary_search(w).is_ok());
            adjacent_to(x) && adjacent_to(y)
        })
        .ok_or_else(|| Error::NotACograph("no vertex adjacent to both sets".into()))?;

    // BFS ball of size |X| around the hub, inside the scope.
    let mut ball = vec![hub];
    let mut seen = vec![false; g.n()];
    seen[hub] = true;
    let mut queue = VecDeque::from([hub]);
    'grow: while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if ball.len() == x.len() {
                break 'grow;
            }
            if in_scope[w] && !seen[w] {
                seen[w] = true;
                ball.push(w);
                queue.push_back(w);
            }
        }
    }
    if ball.len() < x.len() {
        return Err(Error::InternalContradiction(
            "scope smaller than the component".into(),
        ));
    }
    ball.sort_unstable();
    Ok(vec![
        ComponentMove::new(x.to_vec(), ball.clone()),
        ComponentMove::new(ball, y.to_vec()),
    ])
}

fn cs1_within(g: &Graph, scope: &[usize], x: &[usize], y: &[usize]) -> Result<Vec<ComponentMove>> {
    let mut moves = Vec::new();
    let mut cur = x.to_vec();
    if cur == y {
        return Ok(moves);
    }
    if !touches(g, &cur, y)? {
        // Case C-2 (and the single-vertex base case): both sets sit in one
        // co-component; hop one vertex into another co-component, after
        // which the set touches Y.
        let co = g.co_components_within(scope);
        let home = co
            .iter()
            .position(|c| c.binary_search(&cur[0]).is_ok())
            .expect("scope covers the component");
        let other = co
            .iter()
            .enumerate()
            .find(|&(i, _)| i != home)
            .map(|(_, c)| c[0])
            .ok_or_else(|| {
                Error::NotACograph("connected node with a single co-component".into())
            })?;
        let mut next: Vec<usize> = cur[1..].to_vec();
        next.push(other);
        next.sort_unstable();
        moves.push(ComponentMove::new(cur, next.clone()));
        cur = next;
    }
    // Cases A, B and C-1: the set touches Y, and some single exchange keeps
    // it connected and touching Y. Such an exchange is always one step
    // closer, so taking the first one in vertex order stays shortest.
    while cur != y {
        let leaving = sorted_difference(&cur, y);
        let arriving = sorted_difference(y, &cur);
        let step = leaving.iter().find_map(|&out| {
            arriving.iter().find_map(|&inc| {
                let mut next: Vec<usize> = cur.iter().copied().filter(|&v| v != out).collect();
                next.push(inc);
                next.sort_unstable();
                let mut widened = cur.clone();
                widened.push(inc);
                let ok = g.is_connected_set(&next).ok()?
                    && g.is_connected_set(&widened).ok()?
                    && touches(g, &next, y).ok()?;
                ok.then_some(next)
            })
        });
        let next =
            step.ok_or_else(|| Error::NotACograph("no distance-reducing exchange".into()))?;
        moves.push(ComponentMove::new(cur, next.clone()));
        cur = next;
    }
    Ok(moves)
}

/// `CS` or `CS1` on a cograph: decides reconfigurability and returns a
/// shortest sequence under the requested rule.
pub fn solve_cograph_cs(g: &Graph, a: &[usize], b: &[usize], rule: Rule) -> Result<Solution> {
    if !matches!(rule, Rule::CS | Rule::CS1) {
        return Err(Error::InvalidInput(format!(
            "cograph solver handles CS and CS1, not {rule}"
        )));
    }
    let tree = cotree(g)?;
    let a = Configuration::new(g, a.iter().copied())?;
    let b = Configuration::new(g, b.iter().copied())?;
    if a.multiset() != b.multiset() {
        return Ok(Solution::no(reason::MULTISET_MISMATCH));
    }
    let mut moves = Vec::new();
    match solve_node(g, &tree, a.vertices(), b.vertices(), rule, &mut moves)? {
        None => Ok(Solution::yes(moves)),
        Some(why) => Ok(Solution::no(why)),
    }
}

/// Returns `Some(reason)` when the subproblem is a NO instance.
fn solve_node(
    g: &Graph,
    node: &CotreeNode,
    a: &[usize],
    b: &[usize],
    rule: Rule,
    moves: &mut Vec<ComponentMove>,
) -> Result<Option<&'static str>> {
    if a == b {
        return Ok(None);
    }
    let ca = g.connected_components(a)?;
    let cb = g.connected_components(b)?;
    let sizes = |c: &[Vec<usize>]| {
        let mut s: Vec<usize> = c.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(&ca) != sizes(&cb) {
        return Ok(Some(reason::MULTISET_MISMATCH));
    }
    match node {
        CotreeNode::Leaf(_) => unreachable!("equal multisets on one vertex force a == b"),
        CotreeNode::Union(children) => {
            for child in children {
                let part = child.vertices();
                let keep = |s: &[usize]| -> Vec<usize> {
                    s.iter()
                        .copied()
                        .filter(|v| part.binary_search(v).is_ok())
                        .collect()
                };
                if let Some(why) = solve_node(g, child, &keep(a), &keep(b), rule, moves)? {
                    return Ok(Some(why));
                }
            }
            Ok(None)
        }
        CotreeNode::Join(children) => {
            if ca.len() == 1 && cb.len() == 1 {
                let scope = node.vertices();
                let part = match rule {
                    Rule::CS => cs_within(g, &scope, a, b)?,
                    _ => cs1_within(g, &scope, a, b)?,
                };
                moves.extend(part);
                return Ok(None);
            }
            let host = children.iter().find(|child| {
                let part = child.vertices();
                a.iter().chain(b).all(|v| part.binary_search(v).is_ok())
            });
            match host {
                Some(child) => solve_node(g, child, a, b, rule, moves),
                None => Ok(Some(reason::SEPARATE_CO_COMPONENTS)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::verify_sequence;
    use crate::solution::Answer;

    fn has_induced_p4(g: &Graph) -> bool {
        let n = g.n();
        let quads = (0..n).flat_map(|a| {
            (a + 1..n).flat_map(move |b| {
                (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d]))
            })
        });
        quads.into_iter().any(|q| {
            let edges: usize = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| g.has_edge(q[i], q[j]))
                .count();
            let degrees: Vec<usize> = (0..4)
                .map(|i| (0..4).filter(|&j| j != i && g.has_edge(q[i], q[j])).count())
                .collect();
            edges == 3 && g.is_connected_set(&q).unwrap() && degrees.iter().all(|&d| d <= 2)
        })
    }

    #[test]
    fn decomposition_examples() {
        assert!(matches!(
            decompose_cograph(&Graph::path(4)),
            Decomposition::NotACograph { .. }
        ));
        assert_eq!(
            decompose_cograph(&Graph::complete(2)),
            Decomposition::Cotree(CotreeNode::Join(vec![
                CotreeNode::Leaf(0),
                CotreeNode::Leaf(1)
            ]))
        );
        assert_eq!(
            decompose_cograph(&Graph::path(3)),
            Decomposition::Cotree(CotreeNode::Join(vec![
                CotreeNode::Union(vec![CotreeNode::Leaf(0), CotreeNode::Leaf(2)]),
                CotreeNode::Leaf(1),
            ]))
        );
    }

    #[test]
    fn recognition_matches_p4_search() {
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(is_cograph(&g), !has_induced_p4(&g), "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn cs_one_component_examples() {
        assert!(cs_one_component(&Graph::complete(3), &[0], &[0])
            .unwrap()
            .is_empty());
        assert_eq!(
            cs_one_component(&Graph::complete(3), &[0], &[1])
                .unwrap()
                .len(),
            1
        );
        let moves = cs_one_component(&Graph::path(3), &[0], &[2]).unwrap();
        assert_eq!(
            moves,
            vec![
                ComponentMove::new(vec![0], vec![1]),
                ComponentMove::new(vec![1], vec![2])
            ]
        );
        assert!(matches!(
            cs_one_component(&Graph::path(4), &[0], &[3]),
            Err(Error::WrongGraphClass(_))
        ));
    }

    #[test]
    fn cs1_one_component_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            cs1_one_component(&p3, &[0, 1], &[1, 2]).unwrap(),
            vec![ComponentMove::new(vec![0, 1], vec![1, 2])]
        );
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let moves = cs1_one_component(&g, &[0], &[2]).unwrap();
        assert_eq!(moves.len(), 2);
        assert!(cs1_one_component(&g, &[3], &[3]).unwrap().is_empty());
    }

    #[test]
    fn solver_examples() {
        let p3 = Graph::path(3);
        let sol = solve_cograph_cs(&p3, &[0], &[0, 2], Rule::CS).unwrap();
        assert_eq!(
            (sol.answer, sol.reason),
            (Answer::No, Some(reason::MULTISET_MISMATCH))
        );

        let triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let sol = solve_cograph_cs(&triangles, &[0, 3], &[1, 4], Rule::CS).unwrap();
        assert!(sol.is_yes());
        assert_eq!(sol.moves.len(), 2);

        // join of {0,1} and {2,3}, each an edge
        let g = Graph::new(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let sol = solve_cograph_cs(&g, &[0, 1], &[2, 3], Rule::CS).unwrap();
        assert_eq!(sol.moves, vec![ComponentMove::new(vec![0, 1], vec![2, 3])]);
    }

    #[test]
    fn trapped_components_are_rejected() {
        // join of an independent triple {0,1,2} with {3}: two singletons must
        // stay inside {0,1,2}, and {0,1} -> {3, ...} is impossible.
        let g = Graph::new(5, [(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap();
        let sol = solve_cograph_cs(&g, &[0, 1], &[3, 4], Rule::CS1).unwrap();
        assert_eq!(sol.answer, Answer::No);
        // inside the edgeless co-component nothing can slide either
        let sol = solve_cograph_cs(&g, &[0, 1], &[1, 2], Rule::CS1).unwrap();
        assert_eq!(sol.answer, Answer::No);

        // a single component may cross co-components
        let sol = solve_cograph_cs(&g, &[0], &[4], Rule::CS1).unwrap();
        let seq = sol.sequence(&g, Rule::CS1, &[0]).unwrap().unwrap();
        let m = g.cc_multiset(&[0]).unwrap();
        assert_eq!(
            verify_sequence(&g, &seq.vertex_sets(), &m, Rule::CS1).unwrap(),
            None
        );
        assert_eq!(seq.len(), 1);
    }

    #[test]
    fn non_cograph_is_rejected() {
        let err = solve_cograph_cs(&Graph::path(4), &[0], &[1], Rule::CS).unwrap_err();
        assert!(matches!(err, Error::WrongGraphClass(_)));
        let err = solve_cograph_cs(&Graph::path(3), &[0], &[1], Rule::CJ).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }
}
