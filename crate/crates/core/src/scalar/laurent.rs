//! Laurent polynomials in the commutation parameters `q_ij` (`i < j`) with
//! cyclotomic coefficients.

use std::fmt;

use smallvec::SmallVec;

use super::cyclotomic::{fmt_rational, Cyc};
use super::Rational;

/// Slot of `q_ij` (`1 <= i < j`) in an exponent vector. The numbering does
/// not depend on the number of generators: `q12, q13, q23, q14, ...`.
pub fn pair_slot(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j);
    (j - 1) * (j - 2) / 2 + (i - 1)
}

/// Inverse of [`pair_slot`].
pub fn slot_pair(slot: usize) -> (usize, usize) {
    let mut j = 2;
    while (j - 1) * j / 2 <= slot {
        j += 1;
    }
    let i = slot - (j - 1) * (j - 2) / 2 + 1;
    (i, j)
}

/// Exponent vector of a Laurent monomial in the `q_ij`, trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QExp(SmallVec<[i32; 6]>);

impl QExp {
    pub fn one() -> Self {
        QExp::default()
    }

    pub fn from_slots(slots: &[i32]) -> Self {
        let mut v: SmallVec<[i32; 6]> = slots.iter().copied().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        QExp(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn slots(&self) -> &[i32] {
        &self.0
    }

    pub fn mul(&self, other: &QExp) -> QExp {
        let len = self.0.len().max(other.0.len());
        let mut v: SmallVec<[i32; 6]> = SmallVec::with_capacity(len);
        for k in 0..len {
            v.push(self.0.get(k).copied().unwrap_or(0) + other.0.get(k).copied().unwrap_or(0));
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        QExp(v)
    }

    pub fn inv(&self) -> QExp {
        QExp(self.0.iter().map(|e| -e).collect())
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (slot, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let (i, j) = slot_pair(slot);
            if j < 10 {
                write!(f, "q{i}{j}")?;
            } else {
                write!(f, "q({i},{j})")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A scalar of the artifact: a finite sum of `Cyc * q^e` with distinct
/// exponent vectors and nonzero coefficients, sorted by exponent vector.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: SmallVec<[(QExp, Cyc); 1]>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_cyc(Cyc::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::from_cyc(Cyc::from_int(v))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::from_cyc(Cyc::rational(r))
    }

    pub fn from_cyc(c: Cyc) -> Self {
        Scalar::term(QExp::one(), c)
    }

    pub fn q_monomial(e: QExp) -> Self {
        Scalar::term(e, Cyc::one())
    }

    pub fn term(e: QExp, c: Cyc) -> Self {
        let mut terms = SmallVec::new();
        if !c.is_zero() {
            terms.push((e, c));
        }
        Scalar { terms }
    }

    pub fn terms(&self) -> &[(QExp, Cyc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The coefficient as a field element when no `q` appears.
    pub fn as_cyc(&self) -> Option<Cyc> {
        match self.terms.as_slice() {
            [] => Some(Cyc::zero()),
            [(e, c)] if e.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Laurent exponent vector when the scalar is `c * q^e` with `c` rational 1.
    pub fn as_q_monomial(&self) -> Option<&QExp> {
        match self.terms.as_slice() {
            [(e, c)] if c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut terms: SmallVec<[(QExp, Cyc); 1]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                terms.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                terms.push(b[j].clone());
                j += 1;
            } else {
                let c = a[i].1.add(&b[j].1);
                if !c.is_zero() {
                    terms.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
        Scalar { terms }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn scale_cyc(&self, c: &Cyc) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let (e1, c1) = &self.terms[0];
            let (e2, c2) = &other.terms[0];
            return Scalar::term(e1.mul(e2), c1.mul(c2));
        }
        let mut acc = Scalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                acc = acc.add(&Scalar::term(e1.mul(e2), c1.mul(c2)));
            }
        }
        acc
    }

    /// Multiplicative inverse of a single-term scalar.
    pub fn inv(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [(e, c)] => Some(Scalar::term(e.inv(), c.inv()?)),
            _ => None,
        }
    }

    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

impl fmt::Display for Scalar {
    /// Printed form used throughout the textual interfaces, e.g.
    /// `-q12`, `3/2*q12^-1*q13`, `(1 + zeta)*q23 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if let Some(c) = self.as_cyc() {
            return write!(f, "{c}");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let (neg, body) = term_body(e, c);
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn term_body(e: &QExp, c: &Cyc) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        let neg = r < Rational::from_integer(0);
        let abs = if neg { -r } else { r };
        let body = match (e.is_one(), abs == Rational::from_integer(1)) {
            (true, _) => fmt_rational(&abs),
            (false, true) => e.to_string(),
            (false, false) => format!("{}*{}", fmt_rational(&abs), e),
        };
        return (neg, body);
    }
    let body = if e.is_one() {
        format!("({c})")
    } else {
        format!("({c})*{e}")
    };
    (false, body)
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(i: usize, j: usize, e: i32) -> Scalar {
        let mut v = vec![0; pair_slot(i, j) + 1];
        v[pair_slot(i, j)] = e;
        Scalar::q_monomial(QExp::from_slots(&v))
    }

    #[test]
    fn slots_enumerate_pairs() {
        let pairs: Vec<_> = (0..6).map(slot_pair).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]);
        for s in 0..40 {
            let (i, j) = slot_pair(s);
            assert_eq!(pair_slot(i, j), s);
        }
    }

    #[test]
    fn laurent_cancellation() {
        let a = q(1, 2, 1).add(&Scalar::one());
        let b = q(1, 2, -1);
        let prod = a.mul(&b);
        assert_eq!(prod, Scalar::one().add(&q(1, 2, -1)));
        assert!(a.sub(&a).is_zero());
        assert!(q(1, 2, 3).mul(&q(1, 2, -3)).is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(1, 2, 1).neg().to_string(), "-q12");
        let s = q(1, 3, 1).mul(&q(1, 2, -1)).mul(&Scalar::from_rational(Rational::new(3, 2)));
        assert_eq!(s.to_string(), "3/2*q12^-1*q13");
        let z = Scalar::from_cyc(Cyc::zeta_pow(3, 1)).add(&Scalar::one());
        assert_eq!(z.to_string(), "1 + zeta");
        assert_eq!(z.mul(&q(1, 2, 1)).to_string(), "(1 + zeta)*q12");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
