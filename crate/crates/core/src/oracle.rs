//! Brute-force ground truth: every configuration with a given CC-multiset,
//! and breadth-first search over the reconfiguration graph.
//!
//! States are `u64` bitmasks, so the oracle handles graphs with at most 64
//! vertices; the state cap is the practical limit long before that.

use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::{Graph, SizeMultiset};
use crate::rules::{ReconfSequence, Rule};

pub const DEFAULT_STATE_CAP: usize = 2_000_000;

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn set_of(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Lexicographic order on sorted vertex lists of equal length: the set
/// holding the smallest element of the symmetric difference comes first.
fn canonical_key(mask: u64) -> Reverse<u64> {
    Reverse(mask.reverse_bits())
}

/// Adjacency bitmasks of a graph with at most 64 vertices.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    adj: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    pub(crate) fn new(g: &Graph) -> Result<Self> {
        if g.n() > 64 {
            return Err(Error::SpaceTooLarge { cap: 64 });
        }
        let adj = (0..g.n()).map(|v| mask_of(g.neighbors(v))).collect();
        let full = if g.n() == 64 {
            u64::MAX
        } else {
            (1 << g.n()) - 1
        };
        Ok(MaskGraph { adj, full })
    }

    /// Closed neighborhood `N[set]`.
    fn closed(&self, set: u64) -> u64 {
        bits(set).fold(set, |acc, v| acc | self.adj[v])
    }

    pub(crate) fn components(&self, set: u64) -> Vec<u64> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let mut block = rest & rest.wrapping_neg();
            let mut frontier = block;
            while frontier != 0 {
                let grown = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & rest & !block;
                block |= grown;
                frontier = grown;
            }
            rest &= !block;
            out.push(block);
        }
        out
    }

    fn is_connected(&self, set: u64) -> bool {
        self.components(set).len() <= 1
    }

    fn multiset(&self, set: u64) -> Vec<usize> {
        let mut sizes: Vec<usize> = self
            .components(set)
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect();
        sizes.sort_unstable();
        sizes
    }

    /// Calls `emit` once for every connected `size`-subset of `allowed`.
    ///
    /// Enumerates by smallest vertex `v`, growing only through vertices
    /// larger than `v` that are exclusive neighbors of the newest vertex,
    /// so each subset is produced exactly once.
    fn connected_subsets(&self, allowed: u64, size: usize, emit: &mut dyn FnMut(u64)) {
        if size == 0 {
            return;
        }
        for v in bits(allowed) {
            let above = allowed & !((1u64 << v) | ((1u64 << v) - 1));
            let sub = 1u64 << v;
            self.extend(
                sub,
                self.adj[v] & above,
                above,
                self.adj[v] | sub,
                size,
                emit,
            );
        }
    }

    fn extend(
        &self,
        sub: u64,
        mut ext: u64,
        above: u64,
        closed: u64,
        size: usize,
        emit: &mut dyn FnMut(u64),
    ) {
        if sub.count_ones() as usize == size {
            emit(sub);
            return;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.adj[w] & above & !closed;
            self.extend(
                sub | 1 << w,
                ext | exclusive,
                above,
                closed | self.adj[w],
                size,
                emit,
            );
        }
    }

    /// States reachable from `state` in one step under `rule`, restricted to
    /// CC-multiset `target`. Sorted canonically.
    fn neighbors(&self, state: u64, target: &[usize], rule: Rule) -> Vec<u64> {
        let mut out = Vec::new();
        match rule {
            Rule::TJ | Rule::TS => {
                for u in bits(state) {
                    let free = self.full & !state;
                    let candidates = if rule == Rule::TS {
                        free & self.adj[u]
                    } else {
                        free
                    };
                    for w in bits(candidates) {
                        let next = state & !(1 << u) | 1 << w;
                        if self.multiset(next) == target {
                            out.push(next);
                        }
                    }
                }
            }
            Rule::CJ | Rule::CS | Rule::CS1 => {
                for comp in self.components(state) {
                    let rest = state & !comp;
                    let allowed = self.full & !self.closed(rest);
                    let size = comp.count_ones() as usize;
                    match rule {
                        Rule::CS1 => {
                            for x in bits(comp) {
                                for y in bits(allowed & !comp) {
                                    let moved = comp & !(1 << x) | 1 << y;
                                    if self.is_connected(moved) && self.is_connected(moved | comp) {
                                        out.push(rest | moved);
                                    }
                                }
                            }
                        }
                        _ => {
                            let comp_closed = self.closed(comp);
                            self.connected_subsets(allowed, size, &mut |moved| {
                                if moved != comp && (rule == Rule::CJ || moved & comp_closed != 0) {
                                    out.push(rest | moved);
                                }
                            });
                        }
                    }
                }
            }
        }
        out.sort_unstable_by_key(|&m| canonical_key(m));
        out.dedup();
        out
    }
}

/// All vertex subsets with a given CC-multiset, in canonical
/// (lexicographic) order.
#[derive(Debug, Clone)]
pub struct StateSpace {
    graph: Graph,
    masks: MaskGraph,
    multiset: SizeMultiset,
    states: Vec<u64>,
    index: HashMap<u64, usize>,
}

/// Enumerates every configuration of `g` with CC-multiset `multiset`.
///
/// Components are placed largest first; equal-size components are placed in
/// increasing order of their smallest vertex so that each configuration is
/// generated once. Fails with [`Error::SpaceTooLarge`] beyond `cap` states.
pub fn enumerate_states(g: &Graph, multiset: &SizeMultiset, cap: usize) -> Result<StateSpace> {
    let masks = MaskGraph::new(g)?;
    let mut sizes = multiset.sizes().to_vec();
    sizes.reverse();
    let mut states = Vec::new();
    if multiset.total() <= g.n() {
        place(&masks, &sizes, 0, 0, 0, None, cap, &mut states)?;
    }
    states.sort_unstable_by_key(|&m| canonical_key(m));
    let index = states.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    Ok(StateSpace {
        graph: g.clone(),
        masks,
        multiset: multiset.clone(),
        states,
        index,
    })
}

#[allow(clippy::too_many_arguments)]
fn place(
    masks: &MaskGraph,
    sizes: &[usize],
    i: usize,
    placed: u64,
    blocked: u64,
    prev_min: Option<usize>,
    cap: usize,
    out: &mut Vec<u64>,
) -> Result<()> {
    if i == sizes.len() {
        if out.len() >= cap {
            return Err(Error::SpaceTooLarge { cap });
        }
        out.push(placed);
        return Ok(());
    }
    let mut allowed = masks.full & !blocked;
    if let Some(m) = prev_min {
        allowed &= !((1u64 << m) | ((1u64 << m) - 1));
    }
    let mut comps = Vec::new();
    masks.connected_subsets(allowed, sizes[i], &mut |c| comps.push(c));
    for comp in comps {
        let next_min = (i + 1 < sizes.len() && sizes[i + 1] == sizes[i])
            .then(|| comp.trailing_zeros() as usize);
        place(
            masks,
            sizes,
            i + 1,
            placed | comp,
            blocked | masks.closed(comp),
            next_min,
            cap,
            out,
        )?;
    }
    Ok(())
}

impl StateSpace {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn multiset(&self) -> &SizeMultiset {
        &self.multiset
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The `i`-th state as a sorted vertex list.
    pub fn state(&self, i: usize) -> Vec<usize> {
        set_of(self.states[i])
    }

    pub fn states(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.states.iter().map(|&m| set_of(m))
    }

    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        if set.iter().any(|&v| v >= self.graph.n()) {
            return None;
        }
        self.index.get(&mask_of(set)).copied()
    }

    /// Ordinals of the states adjacent to state `i` under `rule`, ascending.
    pub fn neighbors(&self, i: usize, rule: Rule) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .masks
            .neighbors(self.states[i], self.multiset.sizes(), rule)
            .into_iter()
            .map(|m| self.index[&m])
            .collect();
        out.sort_unstable();
        out
    }

    /// BFS distances from state `source`; `None` marks unreachable states.
    pub fn distances_from(&self, source: usize, rule: Rule) -> Vec<Option<usize>> {
        self.bfs(source, rule).0
    }

    fn bfs(&self, source: usize, rule: Rule) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut dist = vec![None; self.len()];
        let mut parent = vec![usize::MAX; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u, rule) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Labels each state with the smallest ordinal of its reachability class.
    pub fn reachability_classes(&self, rule: Rule) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.len()];
        for s in 0..self.len() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u, rule) {
                    if label[w] == usize::MAX {
                        label[w] = s;
                        queue.push_back(w);
                    }
                }
            }
        }
        label
    }

    /// Materializes the reconfiguration graph under `rule`.
    pub fn reconfiguration_graph(&self, rule: Rule) -> ReconfigGraph<'_> {
        let edges = (0..self.len())
            .flat_map(|i| {
                self.neighbors(i, rule)
                    .into_iter()
                    .filter(move |&j| i < j)
                    .map(move |j| (i, j))
            })
            .collect();
        ReconfigGraph {
            space: self,
            rule,
            edges,
        }
    }
}

/// The reconfiguration graph over a [`StateSpace`], with edges `(i, j)`,
/// `i < j`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct ReconfigGraph<'a> {
    pub space: &'a StateSpace,
    pub rule: Rule,
    pub edges: Vec<(usize, usize)>,
}

/// Renders the reconfiguration graph in DOT. Node `i` is state `i`,
/// labelled with its vertex set.
pub fn export_dot(rg: &ReconfigGraph<'_>) -> String {
    let mut out = String::from("graph {\n");
    for (i, state) in rg.space.states().enumerate() {
        let label: Vec<String> = state.iter().map(usize::to_string).collect();
        writeln!(out, "  {i} [label=\"{{{}}}\"];", label.join(",")).unwrap();
    }
    for &(i, j) in &rg.edges {
        writeln!(out, "  {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Result of an oracle search.
#[derive(Debug, Clone)]
pub struct OracleAnswer {
    pub reachable: bool,
    pub distance: Option<usize>,
    pub path: Option<ReconfSequence>,
    pub states: usize,
}

/// Shortest reconfiguration sequence from `a` to `b` under `rule`, by BFS
/// over all configurations with CC-multiset `m(a)`.
///
/// If `m(a) != m(b)` the answer is unreachable without enumerating
/// anything.
pub fn oracle_solve(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    rule: Rule,
    cap: usize,
) -> Result<OracleAnswer> {
    let start = Configuration::new(g, a.iter().copied())?;
    let goal = Configuration::new(g, b.iter().copied())?;
    if start.multiset() != goal.multiset() {
        return Ok(OracleAnswer {
            reachable: false,
            distance: None,
            path: None,
            states: 0,
        });
    }
    let space = enumerate_states(g, start.multiset(), cap)?;
    let (Some(s), Some(t)) = (
        space.index_of(start.vertices()),
        space.index_of(goal.vertices()),
    ) else {
        return Err(Error::InvalidInstance(
            "configuration outside the state space".into(),
        ));
    };
    let (dist, parent) = space.bfs(s, rule);
    let Some(d) = dist[t] else {
        return Ok(OracleAnswer {
            reachable: false,
            distance: None,
            path: None,
            states: space.len(),
        });
    };
    let mut chain = vec![t];
    while *chain.last().unwrap() != s {
        chain.push(parent[*chain.last().unwrap()]);
    }
    chain.reverse();
    let states = chain
        .into_iter()
        .map(|i| Configuration::new(g, space.state(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleAnswer {
        reachable: true,
        distance: Some(d),
        path: Some(ReconfSequence { rule, states }),
        states: space.len(),
    })
}
