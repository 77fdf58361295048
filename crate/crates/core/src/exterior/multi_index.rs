use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing list of chart indices, stored as a bit set.
///
/// Bit `i` stands for coordinate `x^{i+1}`. Ordering is by length and then
/// lexicographic on the sorted index lists, so `{1,2} < {1,3} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u64);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);
    pub const MAX_DIM: usize = 64;

    /// From 1-based indices that must be strictly increasing and `<= dim`.
    pub fn new(indices: &[usize], dim: usize) -> Result<Self> {
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > dim || i > Self::MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            if i <= prev {
                return Err(Error::NotIncreasing(indices.to_vec()));
            }
            prev = i;
            bits |= 1 << (i - 1);
        }
        Ok(MultiIndex(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        MultiIndex(bits)
    }

    pub(crate) fn singleton(i: usize) -> Self {
        MultiIndex(1 << i)
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        self.iter0().map(|i| i + 1).collect()
    }

    /// Zero-based indices in increasing order.
    pub(crate) fn iter0(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub(crate) fn lowest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub(crate) fn contains0(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: MultiIndex) -> bool {
        self.0 & !other.0 == 0
    }

    pub(crate) fn union(self, other: MultiIndex) -> MultiIndex {
        MultiIndex(self.0 | other.0)
    }

    pub(crate) fn minus(self, other: MultiIndex) -> MultiIndex {
        MultiIndex(self.0 & !other.0)
    }

    /// All increasing multi-indices of length `k` in `1..=dim`, in order.
    pub fn all(dim: usize, k: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        if k > dim {
            return out;
        }
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(MultiIndex(cur.iter().fold(0, |acc, &i| acc | (1 << i))));
            // advance to the next combination in lexicographic order
            let mut p = k;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                if cur[p] < dim - k + p {
                    break;
                }
                if p == 0 {
                    return out;
                }
            }
            cur[p] += 1;
            for q in p + 1..k {
                cur[q] = cur[q - 1] + 1;
            }
        }
    }
}

/// Number of pairs `(i, j)` with `i` in `a`, `j` in `b`, and `i > j`.
///
/// The sign of the shuffle that sorts the word `a ++ b` is `(-1)^inversions`.
pub(crate) fn inversions(a: u64, b: u64) -> u32 {
    let mut total = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        if j < 63 {
            total += (a >> (j + 1)).count_ones();
        }
    }
    total
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}
