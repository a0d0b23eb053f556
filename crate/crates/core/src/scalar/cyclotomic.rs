//! Exact arithmetic in the cyclotomic fields `Q(zeta_n)`.
//!
//! An element is stored as its residue modulo the `n`-th cyclotomic
//! polynomial, i.e. as a rational coefficient vector of length `phi(n)` in
//! the power basis `1, zeta, ..., zeta^(phi(n)-1)`. Rational values are always
//! normalized to order 1 so that equality is plain structural equality
//! regardless of which field a rational happened to be computed in.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};

use super::Rational;

/// Largest supported order of the fixed root of unity.
pub const MAX_ORDER: u32 = 128;

type Coeffs = SmallVec<[Rational; 4]>;

fn cyclotomic_table() -> &'static [Vec<i128>] {
    static TABLE: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Vec<i128>> = vec![Vec::new(); MAX_ORDER as usize + 1];
        for n in 1..=MAX_ORDER as usize {
            // x^n - 1 divided by Phi_d for every proper divisor d.
            let mut poly = vec![0i128; n + 1];
            poly[0] = -1;
            poly[n] = 1;
            for d in 1..n {
                if n % d == 0 {
                    poly = exact_div_monic(&poly, &table[d]);
                }
            }
            table[n] = poly;
        }
        table
    })
}

fn exact_div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i128; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &b) in den.iter().enumerate() {
                rem[k + i] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> &'static [i128] {
    assert!(
        (1..=MAX_ORDER).contains(&n),
        "cyclotomic order {n} outside 1..={MAX_ORDER}"
    );
    &cyclotomic_table()[n as usize]
}

/// Euler's totient, i.e. the dimension of `Q(zeta_n)` over `Q`.
pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// An element of `Q(zeta_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc {
    order: u32,
    coeffs: Coeffs,
}

impl Cyc {
    pub fn rational(r: Rational) -> Self {
        Cyc {
            order: 1,
            coeffs: smallvec![r],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Cyc::rational(Rational::from_integer(v as i128))
    }

    pub fn zero() -> Self {
        Cyc::from_int(0)
    }

    pub fn one() -> Self {
        Cyc::from_int(1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let n = order as i64;
        let e = k.rem_euclid(n) as usize;
        let phi = euler_phi(order);
        let mut coeffs: Vec<Rational> = vec![Rational::zero(); e.max(phi) + 1];
        coeffs[e] = Rational::one();
        Cyc::from_poly(order, coeffs)
    }

    /// Builds an element from an arbitrary-length polynomial in `zeta`.
    pub fn from_poly(order: u32, mut poly: Vec<Rational>) -> Self {
        let phi_poly = cyclotomic_poly(order);
        let d = phi_poly.len() - 1;
        if poly.len() > d {
            for k in (d..poly.len()).rev() {
                let c = std::mem::replace(&mut poly[k], Rational::zero());
                if c.is_zero() {
                    continue;
                }
                // x^k = x^(k-d) * x^d and x^d = -(lower terms of Phi_n).
                for (i, &b) in phi_poly[..d].iter().enumerate() {
                    if b != 0 {
                        poly[k - d + i] -= c * Rational::from_integer(b);
                    }
                }
            }
            poly.truncate(d);
        }
        poly.resize(d, Rational::zero());
        Cyc {
            order,
            coeffs: poly.into_iter().collect(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.order != 1 && self.coeffs.iter().skip(1).all(Zero::is_zero) {
            let c0 = self.coeffs[0];
            self.order = 1;
            self.coeffs = smallvec![c0];
        }
        self
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.order == 1).then(|| self.coeffs[0])
    }

    fn common_order(&self, other: &Cyc) -> u32 {
        match (self.order, other.order) {
            (1, o) | (o, 1) => o,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing elements of Q(zeta_{a}) and Q(zeta_{b})"),
        }
    }

    fn lifted(&self, order: u32) -> Coeffs {
        if self.order == order {
            return self.coeffs.clone();
        }
        let mut c: Coeffs = smallvec![Rational::zero(); euler_phi(order)];
        c[0] = self.coeffs[0];
        c
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        if self.order == 1 && other.order == 1 {
            return Cyc::rational(self.coeffs[0] + other.coeffs[0]);
        }
        let order = self.common_order(other);
        let mut a = self.lifted(order);
        let b = other.lifted(order);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += *y;
        }
        Cyc { order, coeffs: a }.normalized()
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -*c).collect(),
        }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: Rational) -> Cyc {
        if r.is_zero() {
            return Cyc::zero();
        }
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| *c * r).collect(),
        }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        if other.order == 1 {
            return self.scale(other.coeffs[0]);
        }
        if self.order == 1 {
            return other.scale(self.coeffs[0]);
        }
        let order = self.common_order(other);
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += *a * *b;
                }
            }
        }
        Cyc::from_poly(order, prod)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(Cyc::rational(self.coeffs[0].recip()));
        }
        // Solve M v = e_0, where column k of M holds self * zeta^k.
        let d = self.coeffs.len();
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d + 1]; d];
        for k in 0..d {
            let col = self.mul(&Cyc::zeta_pow(self.order, k as i64));
            let col = col.lifted(self.order);
            for (i, row) in rows.iter_mut().enumerate() {
                row[k] = col[i];
            }
        }
        rows[0][d] = Rational::one();
        let sol = solve_dense(rows)?;
        Some(Cyc::from_poly(self.order, sol))
    }

    pub fn pow(&self, e: i64) -> Option<Cyc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Some(acc)
    }
}

/// Gauss-Jordan on an augmented `d x (d+1)` system with a unique solution.
fn solve_dense(mut rows: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let d = rows.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col];
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= f * *p;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[d]).collect())
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyc {
    /// Sum of `c*zeta^k` terms; rationals print bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", fmt_rational(&self.coeffs[0]));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", fmt_rational(&abs))?;
                    }
                    if k == 1 {
                        write!(f, "zeta")?;
                    } else {
                        write!(f, "zeta^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]({})", self.order, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(cyclotomic_poly(2), &[1, 1]);
        assert_eq!(cyclotomic_poly(3), &[1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), &[1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), &[1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), &[1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for n in [3u32, 4, 5, 6, 8, 12] {
            let z = Cyc::zeta_pow(n, 1);
            assert!(z.pow(n as i64).unwrap().is_one());
            for k in 1..n as i64 {
                assert!(!z.pow(k).unwrap().is_one(), "zeta_{n}^{k}");
            }
        }
        // zeta_2 = -1 collapses to a rational.
        assert_eq!(Cyc::zeta_pow(2, 1), Cyc::from_int(-1));
        assert_eq!(Cyc::zeta_pow(4, 2), Cyc::from_int(-1));
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in [3u32, 5, 6, 7, 12] {
            let mut acc = Cyc::zero();
            for k in 0..n as i64 {
                acc = acc.add(&Cyc::zeta_pow(n, k));
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn inverse_of_general_element() {
        let a = Cyc::from_poly(
            5,
            vec![
                Rational::new(1, 2),
                Rational::from_integer(3),
                Rational::zero(),
                Rational::from_integer(-1),
            ],
        );
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(Cyc::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Cyc::zeta_pow(6, 2).to_string(), "-1 + zeta");
        assert_eq!(Cyc::rational(Rational::new(-3, 2)).to_string(), "-3/2");
        assert_eq!(Cyc::zeta_pow(5, 3).to_string(), "zeta^3");
    }
}
