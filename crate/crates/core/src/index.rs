//! Strictly increasing index sets, stored as bitmasks.
//!
//! A [`MultiIndex`] labels the basis element `e_I^* = e_{i_1}^* ∧ … ∧ e_{i_p}^*`
//! of `Λ^p V*`. Indices are 1-based in every public API; bit `i - 1` is set
//! when `i ∈ I`. The derived ordering compares bitmasks (colexicographic order
//! on index sets), which is what fixes the iteration order of every sparse map
//! in the crate.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// Builds an index set from strictly increasing 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_DIM });
            }
            if i <= last {
                return Err(Error::NotIncreasing(indices.to_vec()));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(MultiIndex(bits))
    }

    /// Sorts arbitrary distinct indices, returning the set together with the
    /// sign of the sorting permutation, so that
    /// `e_{a_1} ∧ … ∧ e_{a_p} = sign · e_I`. Returns `None` on a repeated index.
    pub fn from_unordered(indices: &[usize]) -> Result<Option<(Self, i32)>> {
        let mut sign = 1;
        let mut acc = MultiIndex::EMPTY;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_DIM });
            }
            let single = MultiIndex::singleton(i);
            match acc.wedge_sign(single) {
                0 => return Ok(None),
                s => sign *= s,
            }
            acc = acc.union(single);
        }
        Ok(Some((acc, sign)))
    }

    pub const fn from_bits(bits: u32) -> Self {
        MultiIndex(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&i));
        MultiIndex(1 << (i - 1))
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_DIM);
        MultiIndex(((1u64 << n) - 1) as u32)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// Largest index, or 0 for the empty set.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn union(self, other: Self) -> Self {
        MultiIndex(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        MultiIndex(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        MultiIndex(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        MultiIndex(Self::full(n).0 & !self.0)
    }

    /// 1-based position of `i` inside the increasing sequence, if present.
    pub fn position(self, i: usize) -> Option<usize> {
        if !self.contains(i) {
            return None;
        }
        let below = self.0 & ((1u32 << (i - 1)) - 1);
        Some(below.count_ones() as usize + 1)
    }

    /// Increasing 1-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }

    /// Sign of `e_I ∧ e_J = ±e_{I∪J}`: `(-1)^{#{(i, j) ∈ I × J : i > j}}`,
    /// or 0 when the sets overlap.
    pub fn wedge_sign(self, other: Self) -> i32 {
        if !self.is_disjoint(other) {
            return 0;
        }
        let mut inversions = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            b &= b - 1;
            // elements of `self` strictly above j
            inversions += (self.0 >> j >> 1).count_ones();
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All index sets of size `p` drawn from `{1, …, n}`, in increasing bitmask order.
    pub fn subsets(n: usize, p: usize) -> Subsets {
        Subsets::new(MultiIndex::full(n), p)
    }

    /// All subsets of `self` with `p` elements, in increasing bitmask order.
    pub fn subsets_of(self, p: usize) -> Subsets {
        Subsets::new(self, p)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Displays as `{1,3,4}`; the empty set is `{}`.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the fixed-size subsets of a parent set, via the rank of each
/// parent element (Gosper's hack on the compressed positions).
#[derive(Clone)]
pub struct Subsets {
    parent: Vec<usize>,
    state: Option<u64>,
    limit: u64,
}

impl Subsets {
    fn new(parent: MultiIndex, p: usize) -> Self {
        let parent: Vec<usize> = parent.indices().collect();
        let m = parent.len();
        let state = if p > m { None } else { Some((1u64 << p) - 1) };
        Subsets {
            parent,
            state,
            limit: 1u64 << m,
        }
    }
}

impl Iterator for Subsets {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.state?;
        if cur >= self.limit && cur != 0 {
            self.state = None;
            return None;
        }
        let mut bits = 0u32;
        let mut c = cur;
        while c != 0 {
            let k = c.trailing_zeros() as usize;
            c &= c - 1;
            bits |= 1 << (self.parent[k] - 1);
        }
        self.state = if cur == 0 {
            None
        } else {
            let lowest = cur & cur.wrapping_neg();
            let ripple = cur + lowest;
            Some((((ripple ^ cur) >> 2) / lowest) | ripple)
        };
        Some(MultiIndex(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[usize]) -> MultiIndex {
        MultiIndex::from_indices(v).unwrap()
    }

    #[test]
    fn construction_checks_order_and_range() {
        assert!(MultiIndex::from_indices(&[2, 1]).is_err());
        assert!(MultiIndex::from_indices(&[1, 1]).is_err());
        assert!(MultiIndex::from_indices(&[0]).is_err());
        assert_eq!(mi(&[1, 3]).indices().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(mi(&[]).to_string(), "{}");
        assert_eq!(mi(&[2, 4, 5]).to_string(), "{2,4,5}");
    }

    #[test]
    fn unordered_input_carries_the_sorting_sign() {
        assert_eq!(MultiIndex::from_unordered(&[2, 1]).unwrap(), Some((mi(&[1, 2]), -1)));
        assert_eq!(MultiIndex::from_unordered(&[3, 1, 2]).unwrap(), Some((mi(&[1, 2, 3]), 1)));
        assert_eq!(MultiIndex::from_unordered(&[1, 1]).unwrap(), None);
    }

    #[test]
    fn wedge_sign_counts_inversions() {
        assert_eq!(mi(&[1]).wedge_sign(mi(&[2])), 1);
        assert_eq!(mi(&[2]).wedge_sign(mi(&[1])), -1);
        assert_eq!(mi(&[1, 2]).wedge_sign(mi(&[2])), 0);
        assert_eq!(mi(&[1, 3]).wedge_sign(mi(&[2, 4])), -1);
        assert_eq!(mi(&[3, 4]).wedge_sign(mi(&[1, 2])), 1);
    }

    #[test]
    fn positions() {
        assert_eq!(mi(&[3, 4]).position(3), Some(1));
        assert_eq!(mi(&[3, 4]).position(4), Some(2));
        assert_eq!(mi(&[3, 4]).position(1), None);
    }

    #[test]
    fn subset_counts_match_binomials() {
        for n in 0..=8 {
            for p in 0..=n + 1 {
                let all: Vec<_> = MultiIndex::subsets(n, p).collect();
                let expected = crate::rational::binomial(n, p);
                assert_eq!(num::BigInt::from(all.len()), expected, "n={n} p={p}");
                assert!(all.iter().all(|s| s.len() == p && s.max_index() <= n));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
        let parent = mi(&[2, 5, 7]);
        let subs: Vec<_> = parent.subsets_of(2).collect();
        assert_eq!(subs, vec![mi(&[2, 5]), mi(&[2, 7]), mi(&[5, 7])]);
    }
}
