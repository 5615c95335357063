use std::collections::HashSet;

use crate::error::Result;
use crate::graph::{Graph, SizeMultiset};

/// A vertex subset together with its connected components and CC-multiset.
///
/// Construction canonicalizes the subset (sorted, deduplicated) and the
/// component list (each block sorted, blocks ordered by smallest vertex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    vertices: Vec<usize>,
    components: Vec<Vec<usize>>,
    multiset: SizeMultiset,
}

impl Configuration {
    pub fn new<I: IntoIterator<Item = usize>>(g: &Graph, vertices: I) -> Result<Self> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let components = g.connected_components(&vertices)?;
        let multiset = SizeMultiset::new(components.iter().map(Vec::len))?;
        Ok(Configuration {
            vertices,
            components,
            multiset,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn multiset(&self) -> &SizeMultiset {
        &self.multiset
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Components of `self` that are not components of `other`, in
    /// canonical order.
    pub fn components_not_in<'a>(&'a self, other: &Configuration) -> Vec<&'a [usize]> {
        let theirs: HashSet<&[usize]> = other.components.iter().map(Vec::as_slice).collect();
        self.components
            .iter()
            .map(Vec::as_slice)
            .filter(|c| !theirs.contains(c))
            .collect()
    }

    /// Replaces component `from` by the vertex set `to`.
    pub fn replace(&self, g: &Graph, from: &[usize], to: &[usize]) -> Result<Self> {
        let removed: HashSet<usize> = from.iter().copied().collect();
        let kept = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !removed.contains(v));
        Configuration::new(g, kept.chain(to.iter().copied()))
    }
}

/// Number of positions where two sorted vertex lists differ, as
/// `(|a \ b|, |b \ a|)`.
pub(crate) fn difference_sizes(a: &[usize], b: &[usize]) -> (usize, usize) {
    let (mut i, mut j) = (0, 0);
    let (mut only_a, mut only_b) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                only_a += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                only_b += 1;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    (only_a + a.len() - i, only_b + b.len() - j)
}

/// Sorted `a \ b` for sorted inputs.
pub(crate) fn sorted_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_err())
        .collect()
}
