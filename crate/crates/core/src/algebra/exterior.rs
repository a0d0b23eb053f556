//! Wedge indices and reordering in the quantum exterior algebras.
//!
//! Two exterior algebras occur. The Koszul complex uses `Λ_q(V)` with
//! `x_a ∧ x_b = -q_ab x_b ∧ x_a`; cochains use the dual `Λ_{q^-1}(V*)` with
//! `dx_a ∧ dx_b = -q_ab^-1 dx_b ∧ dx_a`. Both square generators to zero.

use std::fmt;

use crate::scalar::Scalar;

use super::context::{QContext, Twister};

/// A strictly increasing index tuple, stored as a bitmask (bit `i-1` for `i`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtIndex(u64);

impl ExtIndex {
    pub fn empty() -> Self {
        ExtIndex(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        ExtIndex(bits)
    }

    pub fn single(i: usize) -> Self {
        ExtIndex(1 << (i - 1))
    }

    /// From any collection of distinct indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &i in indices {
            debug_assert!(bits & (1 << (i - 1)) == 0, "repeated index {i}");
            bits |= 1 << (i - 1);
        }
        ExtIndex(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut b = self.0;
        while b != 0 {
            let t = b.trailing_zeros() as usize;
            out.push(t + 1);
            b &= b - 1;
        }
        out
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn with(self, i: usize) -> Self {
        ExtIndex(self.0 | (1 << (i - 1)))
    }

    pub fn without(self, i: usize) -> Self {
        ExtIndex(self.0 & !(1 << (i - 1)))
    }

    pub fn intersects(self, other: ExtIndex) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: ExtIndex) -> Self {
        ExtIndex(self.0 | other.0)
    }

    /// Number of members smaller than `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << (i - 1)) - 1)).count_ones() as usize
    }

    /// All index sets of size `p` in `1..=n`, in increasing bitmask order.
    pub fn all_of_len(n: usize, p: usize) -> Vec<ExtIndex> {
        (0u64..(1u64 << n))
            .filter(|b| b.count_ones() as usize == p)
            .map(ExtIndex)
            .collect()
    }

    /// Renders as `dx(1,3)`.
    pub fn dx_string(self) -> String {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        format!("dx({})", idx.join(","))
    }
}

impl fmt::Debug for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// Sign of the permutation sorting `word` (distinct entries).
pub fn sort_sign(word: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn has_repeat(word: &[usize]) -> bool {
    let mut seen = 0u64;
    for &i in word {
        if seen & (1 << (i - 1)) != 0 {
            return true;
        }
        seen |= 1 << (i - 1);
    }
    false
}

/// Reorders `dx_w1 ∧ dx_w2 ∧ ...` in `Λ_{q^-1}(V*)`: `None` on a repeated
/// index, otherwise the coefficient and the sorted index set.
pub fn ext_reorder(ctx: &QContext, word: &[usize]) -> Option<(Scalar, ExtIndex)> {
    if has_repeat(word) {
        return None;
    }
    let mut tw = Twister::new(ctx.n());
    tw.push_letters(word.iter().copied());
    let c = ctx.twist(tw.exps()).inv().expect("monomial scalar");
    Some((c.scale_cyc(&crate::scalar::Cyc::from_int(sort_sign(word))), ExtIndex::from_indices(word)))
}

/// Reorders `x_w1 ∧ x_w2 ∧ ...` in `Λ_q(V)`.
pub fn wedge_reorder(ctx: &QContext, word: &[usize]) -> Option<(Scalar, ExtIndex)> {
    if has_repeat(word) {
        return None;
    }
    let mut tw = Twister::new(ctx.n());
    tw.push_letters(word.iter().copied());
    let c = ctx.twist(tw.exps());
    Some((c.scale_cyc(&crate::scalar::Cyc::from_int(sort_sign(word))), ExtIndex::from_indices(word)))
}
