use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

use super::context::{QContext, Twister};
use super::monomial::Monomial;

/// Normal-orders a word in the generators: returns `(c, m)` with
/// `x_w1 x_w2 ... = c * x^m` in `S_q(V)`.
pub fn twist_reorder(ctx: &QContext, word: &[usize]) -> (Scalar, Monomial) {
    let mut tw = Twister::new(ctx.n());
    tw.push_letters(word.iter().copied());
    (ctx.twist(tw.exps()), tw.monomial())
}

/// Product of two normal-ordered monomials: `(c, m m')`.
pub fn monomial_product(ctx: &QContext, a: &Monomial, b: &Monomial) -> (Scalar, Monomial) {
    let mut tw = Twister::new(ctx.n());
    tw.push_monomial(a);
    tw.push_monomial(b);
    (ctx.twist(tw.exps()), tw.monomial())
}

/// Normal-ordering coefficient of a product of several monomials.
pub fn monomials_product(ctx: &QContext, factors: &[&Monomial]) -> (Scalar, Monomial) {
    let mut tw = Twister::new(ctx.n());
    for m in factors {
        tw.push_monomial(m);
    }
    (ctx.twist(tw.exps()), tw.monomial())
}

/// The scalar `q_pi` with `q_pi * x_{i_pi(1)} ... x_{i_pi(p)} = x_{i_1} ... x_{i_p}`,
/// for increasing `indices` and `perm` a permutation of `0..p`.
pub fn q_pi(ctx: &QContext, indices: &[usize], perm: &[usize]) -> Scalar {
    let word: Vec<usize> = perm.iter().map(|&k| indices[k]).collect();
    q_pi_word(ctx, &word)
}

/// `q_pi` given the permuted word itself.
pub fn q_pi_word(ctx: &QContext, word: &[usize]) -> Scalar {
    let mut tw = Twister::new(ctx.n());
    tw.push_letters(word.iter().copied());
    let inv: Vec<i32> = tw.exps().iter().map(|e| -e).collect();
    ctx.twist(&inv)
}

/// An element of `S_q(V)`: a finite sum of scalars times normal-ordered
/// monomials with no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one(n: usize) -> Self {
        AlgebraElement::monomial(Monomial::one(n))
    }

    pub fn monomial(m: Monomial) -> Self {
        AlgebraElement::term(Scalar::one(), m)
    }

    pub fn var(n: usize, i: usize) -> Self {
        AlgebraElement::monomial(Monomial::var(n, i))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut a = AlgebraElement::zero();
        a.add_term(m, c);
        a
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        AlgebraElement::term(c, Monomial::one(n))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut a = AlgebraElement::zero();
        for (m, c) in terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))))
    }

    /// Drops the constant term (the projection `A -> A / k`).
    pub fn without_constant(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().filter(|(m, _)| !m.is_one()).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

/// The product in `S_q(V)`.
pub fn multiply(ctx: &QContext, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m1, c1) in a.terms() {
        for (m2, c2) in b.terms() {
            let (t, m) = monomial_product(ctx, m1, m2);
            out.add_term(m, c1.mul(c2).mul(&t));
        }
    }
    out
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
