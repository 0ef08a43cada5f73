use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 16;

/// A basis monomial `e_{i1} ∧ … ∧ e_{ik}` (indices ascending), encoded as a
/// bitmask: bit `i` set means generator `i` (0-based) is present.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u32) -> Self {
        MultiIndex(bits)
    }

    pub fn single(i: usize) -> Self {
        debug_assert!(i < MAX_DIM);
        MultiIndex(1 << i)
    }

    /// Builds the set of the given (0-based) indices; `None` on repeats.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &i in indices {
            let b = 1u32 << i;
            if bits & b != 0 {
                return None;
            }
            bits |= b;
        }
        Some(MultiIndex(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_disjoint(self, other: MultiIndex) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: MultiIndex) -> MultiIndex {
        MultiIndex(self.0 | other.0)
    }

    pub fn without(self, i: usize) -> MultiIndex {
        MultiIndex(self.0 & !(1 << i))
    }

    /// Ascending 0-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
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

    /// Number of elements of `self` strictly below `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }

    /// Sign and union of `self ∧ other` in normal order; `None` when they overlap.
    pub fn wedge(self, other: MultiIndex) -> Option<(bool, MultiIndex)> {
        if !self.is_disjoint(other) {
            return None;
        }
        // transpositions: pairs (a ∈ self, b ∈ other) with b < a
        let swaps: usize = self.indices().map(|a| other.count_below(a)).sum();
        Some((swaps % 2 == 1, self.union(other)))
    }

    /// Position of this monomial in `basis(ambient, degree)`, which orders
    /// monomials of equal degree by ascending bitmask (colexicographic).
    pub fn rank(self) -> usize {
        self.indices()
            .enumerate()
            .map(|(t, pos)| binomial(pos, t + 1))
            .sum()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `C(ambient, k)` monomials of degree `k`, in ascending bitmask order.
pub fn basis(ambient: usize, k: usize) -> Vec<MultiIndex> {
    assert!(ambient <= MAX_DIM, "ambient dimension {ambient} exceeds {MAX_DIM}");
    if k > ambient {
        return Vec::new();
    }
    if k == 0 {
        return vec![MultiIndex::EMPTY];
    }
    let mut out = Vec::with_capacity(binomial(ambient, k));
    // Gosper's hack walks fixed-popcount masks in increasing order.
    let mut x: u32 = (1u32 << k) - 1;
    let limit: u64 = 1u64 << ambient;
    while (x as u64) < limit {
        out.push(MultiIndex(x));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        if r == 0 {
            break;
        }
    }
    out
}
