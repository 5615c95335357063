mod common;

use ccr::cograph::{decompose_cograph, is_cograph, Decomposition};
use ccr::oracle::{enumerate_states, DEFAULT_STATE_CAP};
use ccr::rules::{expand_cs_to_cs1, expand_sequence_to_cs1};
use ccr::{adjacent, verify_sequence, Configuration, Graph, Rule};
use proptest::prelude::*;

use common::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let pairs = all_pairs(n).len();
        graph_from_mask(
            n,
            if pairs == 64 {
                mask
            } else {
                mask & ((1 << pairs) - 1)
            },
        )
    })
}

fn restrict(g: &Graph, mask: u64) -> Vec<usize> {
    set_of(mask & ((1u64 << g.n()) - 1))
}

fn conf(g: &Graph, set: &[usize]) -> Configuration {
    Configuration::new(g, set.iter().copied()).unwrap()
}

/// Brute-force hole search: an induced cycle of length at least 4.
fn has_hole(g: &Graph) -> bool {
    (0u64..1 << g.n()).any(|mask| {
        let set = set_of(mask);
        set.len() >= 4
            && set
                .iter()
                .all(|&v| set.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
            && connected(g, &set)
    })
}

/// Brute-force induced P4 search.
fn has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
                        continue;
                    }
                    let e = |x: usize, y: usize| g.has_edge(vs[x], vs[y]);
                    if e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(0, 3) && !e(1, 3) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn components_partition_and_do_not_touch(g in small_graph(8), mask in any::<u64>()) {
        let set = restrict(&g, mask);
        let blocks = g.connected_components(&set).unwrap();
        let mut union: Vec<usize> = blocks.concat();
        union.sort_unstable();
        prop_assert_eq!(&union, &set);
        prop_assert_eq!(&blocks, &components(&g, &set));
        for (i, x) in blocks.iter().enumerate() {
            prop_assert!(g.is_connected_set(x).unwrap());
            for y in &blocks[i + 1..] {
                prop_assert!(!g.touches(x, y).unwrap());
            }
        }
        let sizes: Vec<usize> = g.cc_multiset(&set).unwrap().sizes().to_vec();
        prop_assert_eq!(sizes, common::sizes(&g, &set));
    }

    #[test]
    fn touches_is_symmetric(g in small_graph(7), m1 in any::<u64>(), m2 in any::<u64>()) {
        let comps_u = g.connected_components(&restrict(&g, m1)).unwrap();
        let comps_w = g.connected_components(&restrict(&g, m2)).unwrap();
        for u in &comps_u {
            for w in &comps_w {
                let mut union = u.clone();
                union.extend(w);
                union.sort_unstable();
                union.dedup();
                prop_assert_eq!(g.touches(u, w).unwrap(), g.touches(w, u).unwrap());
                prop_assert_eq!(g.touches(u, w).unwrap(), connected(&g, &union));
            }
        }
    }

    #[test]
    fn co_components_partition_and_cross_adjacent(g in small_graph(8)) {
        let blocks = g.co_components();
        let mut all: Vec<usize> = blocks.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for (i, x) in blocks.iter().enumerate() {
            for y in &blocks[i + 1..] {
                prop_assert!(x.iter().all(|&u| y.iter().all(|&v| g.has_edge(u, v))));
            }
        }
        prop_assert_eq!(blocks, g.complement().connected_components(&(0..g.n()).collect::<Vec<_>>()).unwrap());
    }

    #[test]
    fn cograph_recognition_matches_p4_freeness(g in small_graph(7)) {
        prop_assert_eq!(is_cograph(&g), !has_induced_p4(&g));
        if let Decomposition::NotACograph { witness } = decompose_cograph(&g) {
            prop_assert!(witness.len() >= 2);
            prop_assert!(g.is_connected_set(&witness).unwrap());
            let sub = g.induced_subgraph(&witness).unwrap().graph;
            prop_assert!(sub.complement().is_connected());
        }
    }

    #[test]
    fn chordality_matches_hole_search(g in small_graph(7)) {
        prop_assert_eq!(g.is_chordal(), !has_hole(&g));
    }

    #[test]
    fn text_format_round_trips(g in small_graph(8)) {
        let parsed: Graph = g.to_text().parse().unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn adjacency_is_symmetric_and_matches_definition(
        g in small_graph(7),
        m1 in any::<u64>(),
        m2 in any::<u64>(),
    ) {
        let (u, w) = (restrict(&g, m1), restrict(&g, m2));
        let (cu, cw) = (conf(&g, &u), conf(&g, &w));
        for rule in Rule::ALL {
            let fwd = adjacent(&g, &cu, &cw, rule);
            prop_assert_eq!(fwd, adjacent(&g, &cw, &cu, rule), "{} not symmetric", rule);
            prop_assert_eq!(fwd, adjacent_by_definition(&g, &u, &w, rule), "{} disagrees", rule);
        }
    }
}

/// Step-level implications over every pair of same-multiset configurations
/// of every connected graph on at most six vertices.
#[test]
fn single_step_rule_implications() {
    let mut checked = 0;
    for n in 1..=6 {
        for g in connected_graphs_up_to_isomorphism(n) {
            for (_, states) in subsets_by_multiset(&g) {
                for u in &states {
                    for w in &states {
                        let (cu, cw) = (conf(&g, u), conf(&g, w));
                        let adj = |r| adjacent(&g, &cu, &cw, r);
                        let (cs1, cs, cj, ts, tj) = (
                            adj(Rule::CS1),
                            adj(Rule::CS),
                            adj(Rule::CJ),
                            adj(Rule::TS),
                            adj(Rule::TJ),
                        );
                        assert!(!cs1 || cs, "CS1 without CS: {u:?} {w:?}");
                        assert!(!cs || cj, "CS without CJ: {u:?} {w:?}");
                        assert!(!cs1 || tj, "CS1 without TJ: {u:?} {w:?}");
                        assert!(!ts || tj, "TS without TJ: {u:?} {w:?}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn cs1_step_need_not_be_a_token_slide() {
    // Sliding the pair {0, 1} to {1, 2} along P3 exchanges 0 for 2, which
    // are not adjacent.
    let g = Graph::path(3);
    let (u, w) = (conf(&g, &[0, 1]), conf(&g, &[1, 2]));
    assert!(adjacent(&g, &u, &w, Rule::CS1));
    assert!(adjacent(&g, &u, &w, Rule::TJ));
    assert!(!adjacent(&g, &u, &w, Rule::TS));
}

#[test]
fn cs_steps_expand_to_valid_cs1_sequences() {
    let mut expanded = 0;
    for n in 2..=6 {
        for g in connected_graphs_up_to_isomorphism(n) {
            for (sizes, states) in subsets_by_multiset(&g) {
                if sizes.is_empty() {
                    continue;
                }
                let m = multiset(&sizes);
                for u in &states {
                    for w in &states {
                        let (cu, cw) = (conf(&g, u), conf(&g, w));
                        if !adjacent(&g, &cu, &cw, Rule::CS) {
                            assert!(expand_cs_to_cs1(&g, &cu, &cw).is_err());
                            continue;
                        }
                        let seq = expand_cs_to_cs1(&g, &cu, &cw).unwrap();
                        let sets = seq.vertex_sets();
                        assert_eq!((&sets[0], sets.last().unwrap()), (u, w));
                        assert_eq!(verify_sequence(&g, &sets, &m, Rule::CS1).unwrap(), None);
                        let shared: Vec<&Vec<usize>> = cu
                            .components()
                            .iter()
                            .filter(|c| cw.components().contains(c))
                            .collect();
                        for state in &seq.states {
                            assert!(shared.iter().all(|c| state.components().contains(c)));
                        }
                        expanded += 1;
                    }
                }
            }
        }
    }
    assert!(expanded > 1000);
}

#[test]
fn whole_cs_sequences_expand() {
    let g = Graph::path(8);
    let ans = ccr::oracle::oracle_solve(
        &g,
        &[0, 1, 2, 6],
        &[3, 4, 5, 7],
        Rule::CS,
        DEFAULT_STATE_CAP,
    )
    .unwrap();
    let cs = ans.path.unwrap();
    let cs1 = expand_sequence_to_cs1(&g, &cs).unwrap();
    let m = g.cc_multiset(&[0, 1, 2, 6]).unwrap();
    assert_eq!(
        verify_sequence(&g, &cs1.vertex_sets(), &m, Rule::CS1).unwrap(),
        None
    );
    assert!(cs1.len() >= cs.len());
    assert_eq!(cs1.vertex_sets().last().unwrap(), &vec![3, 4, 5, 7]);
}

#[test]
fn enumeration_is_complete_on_sampled_graphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=7);
        let mask = rng.gen::<u64>() & ((1u64 << all_pairs(n).len()) - 1);
        let g = graph_from_mask(n, mask);
        for (sizes, states) in subsets_by_multiset(&g) {
            if sizes.is_empty() {
                continue;
            }
            let space = enumerate_states(&g, &multiset(&sizes), DEFAULT_STATE_CAP).unwrap();
            let got: Vec<Vec<usize>> = space.states().collect();
            let mut want = states.clone();
            want.sort();
            assert_eq!(got, want, "{sizes:?}");
        }
    }
}
