//! Fixed-width edge bit sets.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 2]>;

/// A subset of the edges of one graph, stored as a bit vector of width `m`.
///
/// Graphs with at most 128 edges (every snark in the bundled fixtures and the
/// 105-edge counterexample) never touch the heap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    len: usize,
    words: Words,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Self {
        EdgeSubset {
            len,
            words: SmallVec::from_elem(0, len.div_ceil(64)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(len);
        for i in indices {
            if i >= len {
                return Err(Error::EdgeOutOfRange {
                    index: i,
                    edges: len,
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Width of the bit vector, i.e. the edge count of the owning graph.
    #[inline]
    pub fn width(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.len);
        self.words[e >> 6] >> (e & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < self.len);
        self.words[e >> 6] |= 1 << (e & 63);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        debug_assert!(e < self.len);
        self.words[e >> 6] &= !(1 << (e & 63));
    }

    #[inline]
    pub fn toggle(&mut self, e: usize) {
        debug_assert!(e < self.len);
        self.words[e >> 6] ^= 1 << (e & 63);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            Err(Error::WidthMismatch {
                expected: self.len,
                found: other.len,
            })
        } else {
            Ok(())
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.len, other.len, "edge subsets of different graphs");
        let mut out = self.clone();
        for (a, &b) in out.words.iter_mut().zip(other.words.iter()) {
            *a = f(*a, b);
        }
        out.trim();
        out
    }

    /// Set union. Panics if the widths differ; use [`EdgeSubset::try_union`]
    /// for a checked variant.
    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn try_union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.union(other))
    }

    pub fn try_intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.intersection(other))
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "edge subsets of different graphs");
        for (a, &b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "edge subsets of different graphs");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "edge subsets of different graphs");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    /// True when the three sets share no edge.
    pub fn triple_disjoint(a: &Self, b: &Self, c: &Self) -> bool {
        a.words
            .iter()
            .zip(b.words.iter())
            .zip(c.words.iter())
            .all(|((&x, &y), &z)| x & y & z == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_respects_width() {
        for len in [1, 6, 63, 64, 65, 105, 128, 129] {
            let s = EdgeSubset::full(len);
            assert_eq!(s.count(), len);
            assert_eq!(s.complement().count(), 0);
        }
    }

    #[test]
    fn iter_in_index_order() {
        let s = EdgeSubset::from_indices(130, [129, 3, 64, 0]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 3, 64, 129]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            EdgeSubset::from_indices(6, [6]),
            Err(Error::EdgeOutOfRange { index: 6, edges: 6 })
        ));
    }

    #[test]
    fn mixed_width_rejected() {
        let a = EdgeSubset::empty(6);
        let b = EdgeSubset::empty(9);
        assert!(a.try_union(&b).is_err());
    }
}
