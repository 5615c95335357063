//! Seeded random graphs and configurations for tests and benchmarks.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, SizeMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Cograph,
    Chordal,
}

impl std::str::FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cograph" => Ok(GraphKind::Cograph),
            "chordal" => Ok(GraphKind::Chordal),
            _ => Err(Error::InvalidInput(format!("unknown graph kind {s:?}"))),
        }
    }
}

/// Random cograph from a random cotree whose internal nodes alternate
/// between disjoint union and join.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut edges = Vec::new();
    let join = rng.gen_bool(0.5);
    cotree_edges(&vertices, join, rng, &mut edges);
    Graph::new(n, edges).expect("cotree edges are simple")
}

fn cotree_edges<R: Rng>(
    vertices: &[usize],
    join: bool,
    rng: &mut R,
    edges: &mut Vec<(usize, usize)>,
) {
    if vertices.len() < 2 {
        return;
    }
    let parts = rng.gen_range(2..=vertices.len().min(3));
    let mut cuts: Vec<usize> = (1..vertices.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(vertices.len());
    let groups: Vec<&[usize]> = cuts.windows(2).map(|w| &vertices[w[0]..w[1]]).collect();
    if join {
        for (i, gi) in groups.iter().enumerate() {
            for gj in &groups[i + 1..] {
                for &u in *gi {
                    for &v in *gj {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    for group in groups {
        cotree_edges(group, !join, rng, edges);
    }
}

/// Random chordal graph built by repeatedly adding a simplicial vertex:
/// each new vertex picks an existing vertex `v` and joins a random subset
/// of the clique `v` was attached to, plus `v` itself. Cliques have at most
/// `max_clique` vertices. Labels are shuffled at the end.
pub fn random_chordal<R: Rng>(n: usize, max_clique: usize, rng: &mut R) -> Graph {
    let max_clique = max_clique.max(2);
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for u in 0..n {
        if u == 0 {
            cliques.push(vec![0]);
            continue;
        }
        let v = rng.gen_range(0..u);
        let mut pool: Vec<usize> = cliques[v].iter().copied().filter(|&w| w != v).collect();
        pool.shuffle(rng);
        let extra = rng.gen_range(0..=pool.len().min(max_clique - 2));
        let mut attach: Vec<usize> = pool[..extra].to_vec();
        attach.push(v);
        for &w in &attach {
            edges.push((w, u));
        }
        attach.push(u);
        cliques.push(attach);
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(a, b)| (label[a], label[b])))
        .expect("simplicial extension keeps the graph simple")
}

/// Random vertex set whose components have exactly the sizes in
/// `multiset`, by randomized greedy placement: each component grows from a
/// random free vertex through free vertices, and its closed neighbourhood
/// is then blocked. Gives up after `attempts` full restarts.
pub fn random_configuration<R: Rng>(
    g: &Graph,
    multiset: &SizeMultiset,
    attempts: usize,
    rng: &mut R,
) -> Option<Vec<usize>> {
    let n = g.n();
    if multiset.total() > n {
        return None;
    }
    let mut sizes = multiset.sizes().to_vec();
    sizes.reverse();
    'attempt: for _ in 0..attempts {
        let mut blocked = vec![false; n];
        let mut chosen = Vec::with_capacity(multiset.total());
        for &size in &sizes {
            let Some(comp) = grow_component(g, &blocked, size, rng) else {
                continue 'attempt;
            };
            for &v in &comp {
                blocked[v] = true;
                for &w in g.neighbors(v) {
                    blocked[w] = true;
                }
            }
            chosen.extend(comp);
        }
        chosen.sort_unstable();
        return Some(chosen);
    }
    None
}

fn grow_component<R: Rng>(
    g: &Graph,
    blocked: &[bool],
    size: usize,
    rng: &mut R,
) -> Option<Vec<usize>> {
    let n = g.n();
    for _ in 0..32 {
        let start = rng.gen_range(0..n);
        if blocked[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut inside: HashSet<usize> = HashSet::from([start]);
        let mut frontier: Vec<usize> = g
            .neighbors(start)
            .iter()
            .copied()
            .filter(|&w| !blocked[w])
            .collect();
        while comp.len() < size {
            if frontier.is_empty() {
                break;
            }
            let pick = frontier.swap_remove(rng.gen_range(0..frontier.len()));
            if !inside.insert(pick) {
                continue;
            }
            comp.push(pick);
            frontier.extend(
                g.neighbors(pick)
                    .iter()
                    .copied()
                    .filter(|w| !blocked[*w] && !inside.contains(w)),
            );
        }
        if comp.len() == size {
            return Some(comp);
        }
    }
    None
}

/// A generated graph with two configurations of the same CC-multiset.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub graph: Graph,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

const GRAPH_RETRIES: usize = 64;
const PLACEMENT_RETRIES: usize = 64;

/// Deterministic instance for `(kind, n, multiset, seed)`. Fails with
/// [`Error::InvalidInstance`] if no placement is found within the retry
/// bound.
pub fn generate_instance(
    kind: GraphKind,
    n: usize,
    multiset: &SizeMultiset,
    seed: u64,
) -> Result<GeneratedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GRAPH_RETRIES {
        let graph = match kind {
            GraphKind::Path => Graph::path(n),
            GraphKind::Cograph => random_cograph(n, &mut rng),
            GraphKind::Chordal => random_chordal(n, 4, &mut rng),
        };
        if n == 0 && multiset.is_empty() {
            return Ok(GeneratedInstance {
                graph,
                a: Vec::new(),
                b: Vec::new(),
            });
        }
        if n == 0 {
            break;
        }
        let a = random_configuration(&graph, multiset, PLACEMENT_RETRIES, &mut rng);
        let b = random_configuration(&graph, multiset, PLACEMENT_RETRIES, &mut rng);
        if let (Some(a), Some(b)) = (a, b) {
            return Ok(GeneratedInstance { graph, a, b });
        }
    }
    Err(Error::InvalidInstance(format!(
        "could not place components {multiset} in a {kind:?} graph on {n} vertices"
    )))
}
