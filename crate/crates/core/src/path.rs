//! Component sliding and jumping on path graphs.
//!
//! Components on a path are intervals, so a configuration is determined by
//! the left-to-right list of component sizes (its profile) plus the
//! leftmost position of each interval. Under `CS` components can never pass
//! each other, so the profile is invariant. Under `CJ` two neighbours can be
//! swapped by parking the smaller one in the free space right of the
//! left-packed configuration.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::{ComponentMove, ReconfSequence, Rule};
use crate::solution::{reason, Answer};

/// Component sizes from left to right along the path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SizeProfile(pub Vec<usize>);

/// A profile whose entries carry occurrence indices, so equal sizes become
/// distinguishable: `<2, 2, 3>` becomes `<(2,1), (2,2), (3,1)>`. Ranks are
/// 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubscriptedProfile {
    entries: Vec<(usize, usize)>,
    ranks: HashMap<(usize, usize), usize>,
}

impl SubscriptedProfile {
    pub fn new(profile: &SizeProfile) -> Self {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let entries: Vec<(usize, usize)> = profile
            .0
            .iter()
            .map(|&x| {
                let count = seen.entry(x).or_default();
                *count += 1;
                (x, *count)
            })
            .collect();
        let ranks = entries
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i + 1))
            .collect();
        SubscriptedProfile { entries, ranks }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn rank(&self, entry: (usize, usize)) -> Option<usize> {
        self.ranks.get(&entry).copied()
    }
}

/// One component move in compressed form: the component of `size` whose
/// leftmost vertex sits at path position `from` moves so that its leftmost
/// vertex is at `to`. Positions count from the left end of the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedMove {
    pub size: usize,
    pub from: usize,
    pub to: usize,
}

impl CompressedMove {
    fn reversed(self) -> Self {
        CompressedMove {
            size: self.size,
            from: self.to,
            to: self.from,
        }
    }
}

/// A path graph with its left-to-right vertex order.
#[derive(Debug, Clone)]
pub struct PathLayout {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl PathLayout {
    pub fn new(g: &Graph) -> Result<Self> {
        let order = g
            .path_order()
            .ok_or_else(|| Error::WrongGraphClass("graph is not a path".into()))?;
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Ok(PathLayout { order, position })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// `(leftmost position, size)` of each component, left to right.
    pub fn blocks(&self, set: &[usize]) -> Result<Vec<(usize, usize)>> {
        let n = self.n();
        let mut occupied = vec![false; n];
        for &v in set {
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for n = {n}"
                )));
            }
            occupied[self.position[v]] = true;
        }
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < n {
            if occupied[i] {
                let start = i;
                while i < n && occupied[i] {
                    i += 1;
                }
                blocks.push((start, i - start));
            } else {
                i += 1;
            }
        }
        Ok(blocks)
    }

    pub fn vertices_at(&self, start: usize, size: usize) -> Vec<usize> {
        let mut vs = self.order[start..start + size].to_vec();
        vs.sort_unstable();
        vs
    }

    pub fn to_component_move(&self, mv: &CompressedMove) -> ComponentMove {
        ComponentMove::new(
            self.vertices_at(mv.from, mv.size),
            self.vertices_at(mv.to, mv.size),
        )
    }

    /// Expands compressed moves into configurations starting from `start`.
    pub fn expand(
        &self,
        g: &Graph,
        rule: Rule,
        start: &[usize],
        moves: &[CompressedMove],
    ) -> Result<ReconfSequence> {
        let n = self.n();
        if let Some(mv) = moves
            .iter()
            .find(|m| m.size == 0 || m.from + m.size > n || m.to + m.size > n)
        {
            return Err(Error::InvalidInput(format!(
                "compressed move {mv:?} leaves the path"
            )));
        }
        let moves: Vec<ComponentMove> = moves.iter().map(|m| self.to_component_move(m)).collect();
        let start = Configuration::new(g, start.iter().copied())?;
        ReconfSequence::from_moves(g, rule, &start, &moves)
    }
}

pub fn size_profile(g: &Graph, set: &[usize]) -> Result<SizeProfile> {
    let layout = PathLayout::new(g)?;
    Ok(profile_of(&layout.blocks(set)?))
}

fn profile_of(blocks: &[(usize, usize)]) -> SizeProfile {
    SizeProfile(blocks.iter().map(|&(_, s)| s).collect())
}

/// An inversion `(x_i, y_j)`: `x_i` precedes `y_j` in the source profile
/// but follows it in the target.
pub type Inversion = ((usize, usize), (usize, usize));

/// All inversions between two subscripted profiles over the same values,
/// ordered by the source rank of the first entry, then of the second.
pub fn inversions(
    source: &SubscriptedProfile,
    target: &SubscriptedProfile,
) -> Result<Vec<Inversion>> {
    let mut a: Vec<_> = source.entries.clone();
    let mut b: Vec<_> = target.entries.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(Error::InvalidInstance(
            "profiles hold different sizes".into(),
        ));
    }
    let entries = &source.entries;
    let mut out = Vec::new();
    for (i, &x) in entries.iter().enumerate() {
        for &y in &entries[i + 1..] {
            if target.ranks[&x] > target.ranks[&y] {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Free vertices right of the left-packed configuration: `n - |U| - k`.
/// It is `-1` when `U` fills the whole path.
pub fn buffer(n: usize, set_size: usize, components: usize) -> isize {
    n as isize - set_size as isize - components as isize
}

/// Answer of a path solver together with its compressed sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSolution {
    pub answer: Answer,
    pub reason: Option<&'static str>,
    pub moves: Vec<CompressedMove>,
}

impl PathSolution {
    fn yes(moves: Vec<CompressedMove>) -> Self {
        PathSolution {
            answer: Answer::Yes,
            reason: None,
            moves,
        }
    }

    fn no(reason: &'static str) -> Self {
        PathSolution {
            answer: Answer::No,
            reason: Some(reason),
            moves: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

struct Prepared {
    layout: PathLayout,
    source: Vec<(usize, usize)>,
    target: Vec<(usize, usize)>,
}

fn prepare(g: &Graph, a: &[usize], b: &[usize]) -> Result<Option<Prepared>> {
    let layout = PathLayout::new(g)?;
    let source = layout.blocks(a)?;
    let target = layout.blocks(b)?;
    let mut ms: Vec<usize> = source.iter().map(|&(_, s)| s).collect();
    let mut mt: Vec<usize> = target.iter().map(|&(_, s)| s).collect();
    ms.sort_unstable();
    mt.sort_unstable();
    Ok((ms == mt).then_some(Prepared {
        layout,
        source,
        target,
    }))
}

/// Moves that pack `blocks` to the left, processing components left to
/// right. Under `CJ` each component jumps straight to its slot; under `CS`
/// it slides in hops of at most its own size, so that the old and new
/// intervals always touch.
fn pack_left(blocks: &[(usize, usize)], rule: Rule) -> Vec<CompressedMove> {
    let mut moves = Vec::new();
    let mut slot = 0;
    for &(start, size) in blocks {
        let mut cur = start;
        while cur > slot {
            let next = if rule == Rule::CJ {
                slot
            } else {
                slot.max(cur.saturating_sub(size))
            };
            moves.push(CompressedMove {
                size,
                from: cur,
                to: next,
            });
            cur = next;
        }
        slot += size + 1;
    }
    moves
}

/// `target` packed left, reversed: moves from the packed layout to `target`.
fn unpack(target: &[(usize, usize)], rule: Rule) -> Vec<CompressedMove> {
    pack_left(target, rule)
        .into_iter()
        .rev()
        .map(CompressedMove::reversed)
        .collect()
}

/// `CS` on a path: reconfigurable iff the size profiles agree. The
/// sequence packs the source to the left and then unpacks into the target.
pub fn solve_path_cs(g: &Graph, a: &[usize], b: &[usize]) -> Result<PathSolution> {
    let Some(p) = prepare(g, a, b)? else {
        return Ok(PathSolution::no(reason::MULTISET_MISMATCH));
    };
    if profile_of(&p.source) != profile_of(&p.target) {
        return Ok(PathSolution::no(reason::PROFILE_MISMATCH));
    }
    let mut moves = pack_left(&p.source, Rule::CS);
    moves.extend(unpack(&p.target, Rule::CS));
    Ok(PathSolution::yes(moves))
}

/// Whether `CJ` can reorder the source profile into the target: every
/// inversion must leave room for its smaller component in the buffer.
fn cj_feasible(n: usize, source: &[(usize, usize)], target: &[(usize, usize)]) -> Result<bool> {
    let hs = SubscriptedProfile::new(&profile_of(source));
    let ht = SubscriptedProfile::new(&profile_of(target));
    let total: usize = source.iter().map(|&(_, s)| s).sum();
    let room = buffer(n, total, source.len());
    let worst = inversions(&hs, &ht)?
        .into_iter()
        .map(|((x, _), (y, _))| x.min(y) as isize)
        .max();
    Ok(worst.is_none_or(|w| w <= room))
}

/// `CJ` on a path. Reconfigurable iff every inversion `(x_i, y_j)` between
/// the profiles has `min(x, y) <= n - |A| - k`.
///
/// The sequence packs the source left, bubble-sorts the components into
/// the target order (each adjacent swap parks the smaller component in the
/// right buffer, jumps the larger one over, and brings the smaller one
/// back), and finally unpacks into the target.
pub fn solve_path_cj(g: &Graph, a: &[usize], b: &[usize]) -> Result<PathSolution> {
    let Some(p) = prepare(g, a, b)? else {
        return Ok(PathSolution::no(reason::MULTISET_MISMATCH));
    };
    let n = p.layout.n();
    if !cj_feasible(n, &p.source, &p.target)? {
        return Ok(PathSolution::no(reason::INSUFFICIENT_BUFFER));
    }

    let mut moves = pack_left(&p.source, Rule::CJ);

    let ht = SubscriptedProfile::new(&profile_of(&p.target));
    let hs = SubscriptedProfile::new(&profile_of(&p.source));
    // (size, target rank) per slot of the packed layout.
    let mut row: Vec<(usize, usize)> = hs.entries.iter().map(|&e| (e.0, ht.ranks[&e])).collect();
    let mut left: Vec<usize> = Vec::with_capacity(row.len());
    let mut slot = 0;
    for &(size, _) in &row {
        left.push(slot);
        slot += size + 1;
    }
    let total: usize = row.iter().map(|&(s, _)| s).sum();
    let park = total + row.len();

    loop {
        let mut swapped = false;
        for j in 0..row.len().saturating_sub(1) {
            if row[j].1 < row[j + 1].1 {
                continue;
            }
            let (l_size, r_size) = (row[j].0, row[j + 1].0);
            let (l_pos, r_pos) = (left[j], left[j + 1]);
            let new_right = l_pos + r_size + 1;
            if l_size < r_size {
                moves.push(CompressedMove {
                    size: l_size,
                    from: l_pos,
                    to: park,
                });
                moves.push(CompressedMove {
                    size: r_size,
                    from: r_pos,
                    to: l_pos,
                });
                moves.push(CompressedMove {
                    size: l_size,
                    from: park,
                    to: new_right,
                });
            } else {
                moves.push(CompressedMove {
                    size: r_size,
                    from: r_pos,
                    to: park,
                });
                moves.push(CompressedMove {
                    size: l_size,
                    from: l_pos,
                    to: new_right,
                });
                moves.push(CompressedMove {
                    size: r_size,
                    from: park,
                    to: l_pos,
                });
            }
            row.swap(j, j + 1);
            left[j + 1] = new_right;
            swapped = true;
        }
        if !swapped {
            break;
        }
    }

    moves.extend(unpack(&p.target, Rule::CJ));
    Ok(PathSolution::yes(moves))
}

/// Decision-only variants, linear (`CS`) and quadratic (`CJ`) in `n`.
pub fn decide_path_cs(g: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    Ok(match prepare(g, a, b)? {
        Some(p) => profile_of(&p.source) == profile_of(&p.target),
        None => false,
    })
}

pub fn decide_path_cj(g: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    match prepare(g, a, b)? {
        Some(p) => cj_feasible(p.layout.n(), &p.source, &p.target),
        None => Ok(false),
    }
}
