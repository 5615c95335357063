//! Reconfiguration rules, sequence verification, and the expansion of a
//! component slide into single-vertex exchanges.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{difference_sizes, sorted_difference, Configuration};
use crate::error::{Error, Result};
use crate::graph::{Graph, SizeMultiset};

/// A reconfiguration rule.
///
/// `TJ`/`TS` move single vertices; `CJ`/`CS`/`CS1` move whole connected
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    TJ,
    TS,
    CJ,
    CS,
    CS1,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::TJ, Rule::TS, Rule::CJ, Rule::CS, Rule::CS1];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::TJ => "TJ",
            Rule::TS => "TS",
            Rule::CJ => "CJ",
            Rule::CS => "CS",
            Rule::CS1 => "CS1",
        }
    }

    /// Whether tokens are whole components.
    pub fn moves_components(self) -> bool {
        matches!(self, Rule::CJ | Rule::CS | Rule::CS1)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "TJ" => Ok(Rule::TJ),
            "TS" => Ok(Rule::TS),
            "CJ" => Ok(Rule::CJ),
            "CS" => Ok(Rule::CS),
            "CS1" => Ok(Rule::CS1),
            _ => Err(Error::InvalidInput(format!("unknown rule {s:?}"))),
        }
    }
}

/// Whether `u` and `w` are adjacent under `rule`.
///
/// `TJ` and `TS` compare raw vertex sets and ignore component sizes. The
/// component rules additionally require `m(u) = m(w)`.
pub fn adjacent(g: &Graph, u: &Configuration, w: &Configuration, rule: Rule) -> bool {
    match rule {
        Rule::TJ | Rule::TS => {
            if difference_sizes(u.vertices(), w.vertices()) != (1, 1) {
                return false;
            }
            if rule == Rule::TJ {
                return true;
            }
            let a = sorted_difference(u.vertices(), w.vertices())[0];
            let b = sorted_difference(w.vertices(), u.vertices())[0];
            g.has_edge(a, b)
        }
        Rule::CJ | Rule::CS | Rule::CS1 => {
            let Some((c, c_new)) = single_component_change(u, w) else {
                return false;
            };
            if rule == Rule::CJ {
                return true;
            }
            let union: Vec<usize> = c.iter().chain(c_new).copied().collect();
            if !g
                .is_connected_set(&union)
                .expect("configuration vertices are in range")
            {
                return false;
            }
            rule == Rule::CS || difference_sizes(c, c_new) == (1, 1)
        }
    }
}

/// The unique components `(C, C')` with `C(u) \ C(w) = {C}` and
/// `C(w) \ C(u) = {C'}`, provided `m(u) = m(w)`.
fn single_component_change<'a>(
    u: &'a Configuration,
    w: &'a Configuration,
) -> Option<(&'a [usize], &'a [usize])> {
    if u.multiset() != w.multiset() {
        return None;
    }
    let old = u.components_not_in(w);
    let new = w.components_not_in(u);
    match (old.as_slice(), new.as_slice()) {
        ([c], [c_new]) => Some((c, c_new)),
        _ => None,
    }
}

/// Replacement of one token: the vertex set `from` leaves, `to` arrives.
/// Under `TJ`/`TS` both are single vertices; under the component rules they
/// are whole components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentMove {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
}

impl ComponentMove {
    pub fn new(mut from: Vec<usize>, mut to: Vec<usize>) -> Self {
        from.sort_unstable();
        to.sort_unstable();
        ComponentMove { from, to }
    }
}

/// A sequence of configurations claimed valid under `rule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfSequence {
    pub rule: Rule,
    pub states: Vec<Configuration>,
}

impl ReconfSequence {
    /// Applies `moves` to `start` in order.
    pub fn from_moves(
        g: &Graph,
        rule: Rule,
        start: &Configuration,
        moves: &[ComponentMove],
    ) -> Result<Self> {
        let mut states = Vec::with_capacity(moves.len() + 1);
        states.push(start.clone());
        for mv in moves {
            let next = states.last().unwrap().replace(g, &mv.from, &mv.to)?;
            states.push(next);
        }
        Ok(ReconfSequence { rule, states })
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.states.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertex_sets(&self) -> Vec<Vec<usize>> {
        self.states.iter().map(|s| s.vertices().to_vec()).collect()
    }

    /// The moves between consecutive states (symmetric differences).
    pub fn moves(&self) -> Vec<ComponentMove> {
        self.states
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].vertices(), w[1].vertices());
                if self.rule.moves_components() {
                    if let (Some(&c), Some(&c_new)) = (
                        w[0].components_not_in(&w[1]).first(),
                        w[1].components_not_in(&w[0]).first(),
                    ) {
                        return ComponentMove::new(c.to_vec(), c_new.to_vec());
                    }
                }
                ComponentMove::new(sorted_difference(a, b), sorted_difference(b, a))
            })
            .collect()
    }
}

/// Which condition a sequence broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// A state has the wrong CC-multiset.
    Multiset,
    /// Two consecutive states are not adjacent under the rule.
    Adjacency,
}

/// First failure found by [`verify_sequence`]. For [`Condition::Multiset`]
/// `index` is the offending state; for [`Condition::Adjacency`] it is the
/// pair `(index, index + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub condition: Condition,
}

/// Checks that every state has CC-multiset `multiset` and every consecutive
/// pair is adjacent under `rule`. Returns `Ok(None)` for a valid sequence
/// and the first violation (scanning states left to right) otherwise.
pub fn verify_sequence(
    g: &Graph,
    seq: &[Vec<usize>],
    multiset: &SizeMultiset,
    rule: Rule,
) -> Result<Option<Violation>> {
    if seq.is_empty() {
        return Err(Error::InvalidInput(
            "cannot verify an empty sequence".into(),
        ));
    }
    let mut prev: Option<Configuration> = None;
    for (i, set) in seq.iter().enumerate() {
        let cur = Configuration::new(g, set.iter().copied())?;
        if cur.vertices().len() != set.len() {
            return Err(Error::InvalidInput(format!("state {i} repeats a vertex")));
        }
        if cur.multiset() != multiset {
            return Ok(Some(Violation {
                index: i,
                condition: Condition::Multiset,
            }));
        }
        if let Some(p) = &prev {
            if !adjacent(g, p, &cur, rule) {
                return Ok(Some(Violation {
                    index: i - 1,
                    condition: Condition::Adjacency,
                }));
            }
        }
        prev = Some(cur);
    }
    Ok(None)
}

/// Expands a single `CS` step into a `CS1` sequence.
///
/// Searches breadth-first over connected `|C|`-subsets of `G[C ∪ C']`,
/// moving one vertex at a time; every other component stays in place. The
/// subsets never leave `C ∪ C'`, which touches no other component, so each
/// intermediate configuration keeps the multiset. Neighbors are generated
/// in increasing `(removed, added)` order, which fixes the returned path.
pub fn expand_cs_to_cs1(g: &Graph, u: &Configuration, w: &Configuration) -> Result<ReconfSequence> {
    if !adjacent(g, u, w, Rule::CS) {
        return Err(Error::InvalidInput(
            "configurations are not CS-adjacent".into(),
        ));
    }
    let (c, c_new) = single_component_change(u, w).expect("CS adjacency implies one change");
    let mut union: Vec<usize> = c.iter().chain(c_new).copied().collect();
    union.sort_unstable();
    union.dedup();

    let start = c.to_vec();
    let goal = c_new.to_vec();
    let mut parent: HashMap<Vec<usize>, Option<Vec<usize>>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        let outside = sorted_difference(&union, &cur);
        for &x in &cur {
            for &y in &outside {
                let mut next: Vec<usize> = cur.iter().copied().filter(|&v| v != x).collect();
                next.push(y);
                next.sort_unstable();
                if parent.contains_key(&next) || !g.is_connected_set(&next)? {
                    continue;
                }
                parent.insert(next.clone(), Some(cur.clone()));
                queue.push_back(next);
            }
        }
    }
    if !parent.contains_key(&goal) {
        return Err(Error::InternalContradiction(
            "no single-vertex morph between slid components".into(),
        ));
    }
    let mut chain = vec![goal];
    while let Some(Some(prev)) = parent.get(chain.last().unwrap()) {
        chain.push(prev.clone());
    }
    chain.reverse();

    let rest = sorted_difference(u.vertices(), c);
    let states = chain
        .into_iter()
        .map(|part| Configuration::new(g, rest.iter().copied().chain(part)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReconfSequence {
        rule: Rule::CS1,
        states,
    })
}

/// Replaces every `CS` step of `seq` by its `CS1` expansion.
pub fn expand_sequence_to_cs1(g: &Graph, seq: &ReconfSequence) -> Result<ReconfSequence> {
    let mut states = vec![seq.states[0].clone()];
    for pair in seq.states.windows(2) {
        let part = expand_cs_to_cs1(g, &pair[0], &pair[1])?;
        states.extend(part.states.into_iter().skip(1));
    }
    Ok(ReconfSequence {
        rule: Rule::CS1,
        states,
    })
}
