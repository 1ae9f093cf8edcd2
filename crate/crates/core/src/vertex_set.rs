//! Subsets of a ground set `[n]` with `n <= 64`, stored as bitmasks.
//!
//! Vertex `i` (1-based) occupies bit `i - 1`. The ordering is lexicographic on
//! the ascending vertex lists, so `[1,2] < [1,2,3] < [1,3] < [2]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based labels, checking them against `[n]`.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut bits = 0u64;
        for &v in labels {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> VertexSet {
        self.union(VertexSet::singleton(v))
    }

    pub fn remove(self, v: usize) -> VertexSet {
        self.difference(VertexSet::singleton(v))
    }

    /// Complement inside `[n]`.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    /// Smallest vertex, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest vertex, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this set, including the empty set and the set itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Maps vertex `v` to `image[v - 1]`.
    pub fn map(self, image: &[usize]) -> VertexSet {
        self.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.insert(image[v - 1]))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff.trailing_zeros();
        let above = |bits: u64| low < 63 && bits >> (low + 1) != 0;
        if self.0 >> low & 1 == 1 {
            // self continues with `low`, other continues with something larger or ends
            if above(other.0) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if above(self.0) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.insert(v))
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// Keeps the inclusion-maximal members, sorted canonically.
pub fn maximal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect();
    all.sort_by_key(|s| std::cmp::Reverse(s.len()));
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps the inclusion-minimal members, sorted canonically.
pub fn minimal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect();
    all.sort_by_key(|s| s.len());
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Minimal transversals (hitting sets) of a family, by Berge's incremental
/// algorithm. An empty member makes the result empty; an empty family gives `{∅}`.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut family: Vec<VertexSet> = minimal_sets(family.iter().copied());
    family.sort_by_key(|s| s.len());
    let mut current = vec![VertexSet::EMPTY];
    for &edge in &family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.insert(v)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}
