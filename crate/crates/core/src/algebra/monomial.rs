use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `l` of the normal-ordered monomial `x_1^l1 ... x_N^lN`.
/// Always has length `N`; ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    /// The generator `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        Monomial::var_pow(n, i, 1)
    }

    pub fn var_pow(n: usize, i: usize, k: u32) -> Self {
        let mut m = Monomial::one(n);
        m.0[i - 1] = k;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial(exps.iter().copied().collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn with_exp(&self, i: usize, k: u32) -> Monomial {
        let mut m = self.clone();
        m.0[i - 1] = k;
        m
    }

    /// The factor `x_lo^l_lo ... x_hi^l_hi` (1-based, inclusive bounds).
    pub fn restrict(&self, lo: usize, hi: usize) -> Monomial {
        let mut m = Monomial::one(self.0.len());
        for i in lo.max(1)..=hi.min(self.0.len()) {
            m.0[i - 1] = self.0[i - 1];
        }
        m
    }

    /// Indices with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1)
    }

    /// All monomials of total degree exactly `d` in `n` variables, in lex order.
    pub fn of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fill(&mut out, &mut cur, 0, d);
        out.sort();
        out
    }

    /// All monomials of total degree in `lo..=hi`.
    pub fn up_to_degree(n: usize, lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi).flat_map(|d| Monomial::of_degree(n, d)).collect()
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, left: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(Monomial::from_exps(cur));
        cur[pos] = 0;
        return;
    }
    for k in 0..=left {
        cur[pos] = k;
        fill(out, cur, pos + 1, left - k);
    }
    cur[pos] = 0;
}

impl fmt::Display for Monomial {
    /// `x1^2*x3`, or `1` for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
