//! Simple undirected graphs over dense vertex ids `0..n`, plus the
//! connected-component machinery every solver is built on.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are stored back to back (vertex `v` owns
/// `targets[offsets[v]..offsets[v + 1]]`) and kept sorted, so they double as
/// an adjacency-set view through binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and duplicate
    /// edges (in either orientation).
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        let mut degree = vec![0usize; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            degree[u] += 1;
            degree[v] += 1;
            pairs.push((u, v));
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in &pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for u in 0..n {
            let list = &mut targets[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge ({}, {})",
                    u.min(w[0]),
                    u.max(w[0])
                )));
            }
        }
        Ok(Graph {
            offsets,
            targets,
            edge_count: pairs.len(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            edge_count: 0,
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        });
        Graph::new(n, edges.collect::<Vec<_>>()).expect("complement of a simple graph is simple")
    }

    pub(crate) fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(v) => Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n = {}",
                self.n()
            ))),
            None => Ok(()),
        }
    }

    /// Partition of `set` into maximal connected blocks. Each block is
    /// sorted and blocks are ordered by their smallest vertex.
    pub fn connected_components(&self, set: &[usize]) -> Result<Vec<Vec<usize>>> {
        self.check_vertices(set)?;
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        let mut sorted: Vec<usize> = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let mut blocks = Vec::new();
        let mut queue = VecDeque::new();
        for &start in &sorted {
            if !member[start] {
                continue;
            }
            member[start] = false;
            queue.push_back(start);
            let mut block = Vec::new();
            while let Some(u) = queue.pop_front() {
                block.push(u);
                for &w in self.neighbors(u) {
                    if member[w] {
                        member[w] = false;
                        queue.push_back(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Ok(blocks)
    }

    /// Sorted sizes of the connected components of `set`.
    pub fn cc_multiset(&self, set: &[usize]) -> Result<SizeMultiset> {
        let blocks = self.connected_components(set)?;
        Ok(SizeMultiset::new(blocks.iter().map(Vec::len)).expect("blocks are non-empty"))
    }

    /// Whether `set` induces a connected subgraph. The empty set counts as
    /// connected.
    pub fn is_connected_set(&self, set: &[usize]) -> Result<bool> {
        Ok(self.connected_components(set)?.len() <= 1)
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n()).collect();
        self.connected_components(&all)
            .map(|b| b.len() <= 1)
            .unwrap_or(false)
    }

    /// Whether `u` and `w` touch, i.e. `u ∪ w` is connected. Both arguments
    /// must themselves be connected and non-empty.
    pub fn touches(&self, u: &[usize], w: &[usize]) -> Result<bool> {
        for set in [u, w] {
            if set.is_empty() || !self.is_connected_set(set)? {
                return Err(Error::InvalidInput(format!(
                    "touches expects non-empty connected sets, got {set:?}"
                )));
            }
        }
        let union: Vec<usize> = u.iter().chain(w).copied().collect();
        self.is_connected_set(&union)
    }

    /// Connected components of the complement graph, as vertex sets of `self`.
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        self.co_components_within(&all)
    }

    /// Connected components of the complement of `G[set]`.
    ///
    /// Runs a BFS in the complement without materializing it: the vertices
    /// not yet reached are kept in a list, and each dequeued vertex splits
    /// that list into its neighbors (which stay) and its non-neighbors
    /// (which join the current block). Every comparison either removes a
    /// vertex from the list or is charged to an edge, so the cost is
    /// `O(|set| + |E(G[set])|)` plus the marker reset.
    pub fn co_components_within(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = set.to_vec();
        remaining.sort_unstable();
        remaining.dedup();
        remaining.reverse();
        let mut mark = vec![false; self.n()];
        let mut blocks = Vec::new();
        let mut queue = VecDeque::new();
        while let Some(start) = remaining.pop() {
            queue.push_back(start);
            let mut block = Vec::new();
            while let Some(u) = queue.pop_front() {
                block.push(u);
                for &w in self.neighbors(u) {
                    mark[w] = true;
                }
                let mut keep = Vec::with_capacity(remaining.len());
                for &w in &remaining {
                    if mark[w] {
                        keep.push(w);
                    } else {
                        queue.push_back(w);
                    }
                }
                remaining = keep;
                for &w in self.neighbors(u) {
                    mark[w] = false;
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    /// `G[set]`, relabelled to `0..|set|` in increasing vertex order.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<InducedSubgraph> {
        self.check_vertices(set)?;
        let mut to_parent: Vec<usize> = set.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let mut from_parent = vec![None; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let mut edges = Vec::new();
        for (i, &v) in to_parent.iter().enumerate() {
            for &w in self.neighbors(v) {
                if let Some(j) = from_parent[w] {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::new(to_parent.len(), edges)?;
        Ok(InducedSubgraph {
            graph,
            to_parent,
            from_parent,
        })
    }

    /// The vertices in left-to-right order if the graph is a path
    /// (connected, `n - 1` edges, maximum degree two). The walk starts at
    /// the endpoint with the smaller id. A single vertex is a path; the
    /// empty graph is not.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n == 0 || self.edge_count + 1 != n || (0..n).any(|v| self.degree(v) > 2) {
            return None;
        }
        let start = (0..n).find(|&v| self.degree(v) <= 1)?;
        let mut order = Vec::with_capacity(n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            match self.neighbors(cur).iter().find(|&&w| w != prev) {
                Some(&next) if order.len() < n => {
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }

    /// Maximum-cardinality search order (first visited first).
    ///
    /// Unvisited vertices sit in doubly linked bucket lists indexed by label,
    /// stored in flat `u32` arrays to keep the working set small.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        const NIL: u32 = u32::MAX;
        let n = self.n();
        assert!(
            n < NIL as usize,
            "graph too large for maximum-cardinality search"
        );
        let mut label = vec![0u32; n];
        let mut done = vec![false; n];
        let mut head = vec![NIL; n.max(1)];
        let mut next = vec![NIL; n];
        let mut prev = vec![NIL; n];
        for v in (0..n).rev() {
            next[v] = head[0];
            if head[0] != NIL {
                prev[head[0] as usize] = v as u32;
            }
            head[0] = v as u32;
        }
        let mut high = 0;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            while head[high] == NIL {
                high -= 1;
            }
            let v = head[high] as usize;
            head[high] = next[v];
            if next[v] != NIL {
                prev[next[v] as usize] = NIL;
            }
            done[v] = true;
            order.push(v);
            for &w in self.neighbors(v) {
                if done[w] {
                    continue;
                }
                let l = label[w] as usize;
                if prev[w] == NIL {
                    head[l] = next[w];
                } else {
                    next[prev[w] as usize] = next[w];
                }
                if next[w] != NIL {
                    prev[next[w] as usize] = prev[w];
                }
                label[w] += 1;
                prev[w] = NIL;
                next[w] = head[l + 1];
                if head[l + 1] != NIL {
                    prev[head[l + 1] as usize] = w as u32;
                }
                head[l + 1] = w as u32;
                high = high.max(l + 1);
            }
        }
        order
    }

    /// Whether eliminating vertices in `order` only ever removes simplicial
    /// vertices.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let n = self.n();
        if order.len() != n || n >= u32::MAX as usize {
            return false;
        }
        let mut pos = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != u32::MAX {
                return false;
            }
            pos[v] = i as u32;
        }
        for &v in order {
            let later = self.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]);
            let Some(&parent) = later.clone().min_by_key(|&&w| pos[w]) else {
                continue;
            };
            if later
                .filter(|&&w| w != parent)
                .any(|&w| !self.has_edge(parent, w))
            {
                return false;
            }
        }
        true
    }

    /// Chordality via maximum-cardinality search: the reverse of an MCS
    /// order is a perfect elimination ordering exactly when the graph is
    /// chordal.
    pub fn is_chordal(&self) -> bool {
        let mut order = self.maximum_cardinality_search();
        order.reverse();
        self.is_perfect_elimination_ordering(&order)
    }

    /// Serializes to the `n m` / `u v` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Parses the text format: a header `n m`, then exactly `m` lines `u v` with
/// `u < v < n`. Blank lines and lines starting with `#` are ignored.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, text: &str| -> Result<(usize, usize)> {
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err(
                    line,
                    format!("expected two integers, got {text:?}"),
                ));
            }
            let a = fields[0]
                .parse()
                .map_err(|e| parse_err(line, format!("{}: {e}", fields[0])))?;
            let b = fields[1]
                .parse()
                .map_err(|e| parse_err(line, format!("{}: {e}", fields[1])))?;
            Ok((a, b))
        };

        let (line, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::with_capacity(m);
        let mut last_line = line;
        for _ in 0..m {
            let (line, text) = lines
                .next()
                .ok_or_else(|| parse_err(last_line + 1, format!("expected {m} edges")))?;
            last_line = line;
            let (u, v) = parse_pair(line, text)?;
            if u == v {
                return Err(parse_err(line, format!("self-loop at vertex {u}")));
            }
            if u > v || v >= n {
                return Err(parse_err(
                    line,
                    format!("edge must satisfy u < v < n, got {u} {v}"),
                ));
            }
            if !seen.insert((u, v)) {
                return Err(parse_err(line, format!("duplicate edge {u} {v}")));
            }
            edges.push((u, v));
        }
        if let Some((line, text)) = lines.next() {
            return Err(parse_err(
                line,
                format!("unexpected trailing content {text:?}"),
            ));
        }
        Graph::new(n, edges)
    }
}

/// An induced subgraph together with the relabelling in both directions.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Local id -> parent id.
    pub to_parent: Vec<usize>,
    /// Parent id -> local id, for vertices in the subgraph.
    pub from_parent: Vec<Option<usize>>,
}

/// Multiset of connected-component sizes, stored sorted non-decreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizeMultiset(Vec<usize>);

impl SizeMultiset {
    pub fn new<I: IntoIterator<Item = usize>>(sizes: I) -> Result<Self> {
        let mut sizes: Vec<usize> = sizes.into_iter().collect();
        if sizes.contains(&0) {
            return Err(Error::InvalidInput(
                "component sizes must be positive".into(),
            ));
        }
        sizes.sort_unstable();
        Ok(SizeMultiset(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of vertices.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The common size, if every component has the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        match self.0.first() {
            Some(&s) if self.0.iter().all(|&x| x == s) => Some(s),
            _ => None,
        }
    }
}

impl std::fmt::Display for SizeMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_has_induced_hole(g: &Graph) -> bool {
        // Enumerate vertex subsets of size >= 4 and check whether the induced
        // subgraph is a single cycle: connected and 2-regular.
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            set.len() >= 4
                && g.is_connected_set(&set).unwrap()
                && set
                    .iter()
                    .all(|&v| set.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
        })
    }

    fn graph_from_mask(n: usize, mask: u32) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    }

    #[test]
    fn components_examples() {
        let p5 = Graph::path(5);
        assert_eq!(
            p5.connected_components(&[0, 1, 3]).unwrap(),
            vec![vec![0, 1], vec![3]]
        );
        assert!(p5.connected_components(&[]).unwrap().is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.connected_components(&[3, 0, 2]).unwrap(),
            vec![vec![0, 2, 3]]
        );
        assert!(matches!(
            p5.connected_components(&[5]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn multiset_examples() {
        let p5 = Graph::path(5);
        assert_eq!(p5.cc_multiset(&[0, 1, 3]).unwrap().sizes(), &[1, 2]);
        let p6 = Graph::path(6);
        assert_eq!(p6.cc_multiset(&[0, 1, 3, 4, 5]).unwrap().sizes(), &[2, 3]);
        assert!(p6.cc_multiset(&[]).unwrap().is_empty());
    }

    #[test]
    fn touches_examples() {
        let p5 = Graph::path(5);
        assert!(p5.touches(&[0, 1], &[2]).unwrap());
        assert!(!p5.touches(&[0, 1], &[3, 4]).unwrap());
        assert!(p5.touches(&[1], &[1]).unwrap());
        assert!(matches!(
            p5.touches(&[0, 2], &[1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn co_component_examples() {
        assert_eq!(
            Graph::complete(4).co_components(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(Graph::path(3).co_components(), vec![vec![0, 2], vec![1]]);
        assert_eq!(Graph::empty(3).co_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn co_components_match_complement_on_small_graphs() {
        for n in 1..=5 {
            for mask in 0u32..1 << (n * (n - 1) / 2) {
                let g = graph_from_mask(n, mask);
                let all: Vec<usize> = (0..n).collect();
                let expected = g.complement().connected_components(&all).unwrap();
                assert_eq!(g.co_components(), expected, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let p5 = Graph::path(5);
        let sub = p5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph, Graph::path(3));
        let sub = p5.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(sub.graph, Graph::empty(3));
        assert_eq!(sub.to_parent, vec![0, 2, 4]);
        assert_eq!(sub.from_parent[2], Some(1));
        assert_eq!(sub.from_parent[1], None);
        let sub = p5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(sub.graph, p5);
        assert_eq!(sub.to_parent, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn chordality_examples() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
        assert!(brute_force_has_induced_hole(&Graph::cycle(5)));
        let tree = Graph::new(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(tree.is_chordal());
        assert!(Graph::complete(5).is_chordal());
    }

    #[test]
    fn chordality_matches_hole_search_up_to_six_vertices() {
        for n in 1..=6 {
            for mask in 0u32..1 << (n * (n - 1) / 2) {
                let g = graph_from_mask(n, mask);
                assert_eq!(
                    g.is_chordal(),
                    !brute_force_has_induced_hole(&g),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn path_recognition() {
        assert_eq!(Graph::path(4).path_order(), Some(vec![0, 1, 2, 3]));
        assert_eq!(Graph::path(1).path_order(), Some(vec![0]));
        let relabelled = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(relabelled.path_order(), Some(vec![1, 3, 0, 2]));
        assert_eq!(Graph::cycle(4).path_order(), None);
        assert_eq!(Graph::empty(0).path_order(), None);
        assert_eq!(Graph::new(4, [(0, 1), (2, 3)]).unwrap().path_order(), None);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.path_order(), None);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn text_format() {
        let g: Graph = "# a path\n4 3\n0 1\n1 2\n\n2 3\n".parse().unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
        assert!(matches!(
            "3 1\n1 1\n".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "3 2\n0 1\n0 1\n".parse::<Graph>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "3 1\n2 1\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "3 2\n0 1\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "3 0\n0 1\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
    }
}
