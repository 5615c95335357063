//! Brute-force helpers shared by the integration suites. Everything here
//! works straight from the definitions on small graphs and avoids the
//! library's configuration and rule code.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use ccr::{Graph, Rule, SizeMultiset};

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = all_pairs(n);
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

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, via the minimum edge mask over all relabellings.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(u, v))| {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        acc | 1 << index[&(a, b)]
                    })
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let g = graph_from_mask(n, canon);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

pub fn set_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Components of `set` by union-find over graph edges.
pub fn components(g: &Graph, set: &[usize]) -> Vec<Vec<usize>> {
    let mut parent: BTreeMap<usize, usize> = set.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let p = parent[&x];
        if p == x {
            return x;
        }
        let r = find(parent, p);
        parent.insert(x, r);
        r
    }
    for &u in set {
        for &v in set {
            if u < v && g.has_edge(u, v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent.insert(ru, rv);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in set {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.iter_mut().for_each(|c| c.sort_unstable());
    out.sort();
    out
}

pub fn sizes(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = components(g, set).iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

pub fn connected(g: &Graph, set: &[usize]) -> bool {
    components(g, set).len() <= 1
}

/// Every subset of `V(g)` grouped by CC-multiset (the empty set included).
pub fn subsets_by_multiset(g: &Graph) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 0u64..1 << g.n() {
        let set = set_of(mask);
        groups.entry(sizes(g, &set)).or_default().push(set);
    }
    groups
}

pub fn multiset(sizes: &[usize]) -> SizeMultiset {
    SizeMultiset::new(sizes.iter().copied()).unwrap()
}

/// Rule adjacency straight from the definitions.
pub fn adjacent_by_definition(g: &Graph, u: &[usize], w: &[usize], rule: Rule) -> bool {
    let minus = |x: &[usize], y: &[usize]| -> Vec<usize> {
        x.iter().copied().filter(|v| !y.contains(v)).collect()
    };
    match rule {
        Rule::TJ | Rule::TS => {
            let (a, b) = (minus(u, w), minus(w, u));
            a.len() == 1 && b.len() == 1 && (rule == Rule::TJ || g.has_edge(a[0], b[0]))
        }
        _ => {
            if sizes(g, u) != sizes(g, w) {
                return false;
            }
            let cu = components(g, u);
            let cw = components(g, w);
            let old: Vec<&Vec<usize>> = cu.iter().filter(|c| !cw.contains(c)).collect();
            let new: Vec<&Vec<usize>> = cw.iter().filter(|c| !cu.contains(c)).collect();
            if old.len() != 1 || new.len() != 1 {
                return false;
            }
            let (c, c2) = (old[0], new[0]);
            let union: Vec<usize> = c
                .iter()
                .chain(c2.iter())
                .copied()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            match rule {
                Rule::CJ => true,
                Rule::CS => connected(g, &union),
                _ => connected(g, &union) && minus(c, c2).len() == 1 && minus(c2, c).len() == 1,
            }
        }
    }
}
