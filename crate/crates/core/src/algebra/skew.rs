use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

use super::context::QContext;
use super::element::{monomial_product, AlgebraElement};
use super::group::{GroupAction, GroupElement};
use super::monomial::Monomial;

/// An element of `S_q(V) ⋊ G`, a sum of terms `c x^l ♯ g`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SkewElement {
    terms: BTreeMap<(Monomial, GroupElement), Scalar>,
}

impl SkewElement {
    pub fn zero() -> Self {
        SkewElement::default()
    }

    pub fn term(c: Scalar, m: Monomial, g: GroupElement) -> Self {
        let mut s = SkewElement::zero();
        s.add_term(m, g, c);
        s
    }

    /// `a ♯ g`.
    pub fn from_algebra(a: &AlgebraElement, g: &GroupElement) -> Self {
        let mut s = SkewElement::zero();
        for (m, c) in a.terms() {
            s.add_term(m.clone(), g.clone(), c.clone());
        }
        s
    }

    pub fn add_term(&mut self, m: Monomial, g: GroupElement, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((m, g)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, GroupElement), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for ((m, g), c) in &other.terms {
            out.add_term(m.clone(), g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SkewElement {
        SkewElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &SkewElement) -> SkewElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> SkewElement {
        let mut out = SkewElement::zero();
        for ((m, g), c) in &self.terms {
            out.add_term(m.clone(), g.clone(), c.mul(s));
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> SkewElement {
        let mut out = SkewElement::zero();
        for ((m, g), c) in &self.terms {
            out.add_term(m.clone(), g.clone(), f(c));
        }
        out
    }
}

/// `(a ♯ g)(b ♯ h) = a (g . b) ♯ gh`.
pub fn skew_multiply(ctx: &QContext, action: &GroupAction, x: &SkewElement, y: &SkewElement) -> SkewElement {
    let group = action.group();
    let mut out = SkewElement::zero();
    for ((m1, g), c1) in x.terms() {
        for ((m2, h), c2) in y.terms() {
            let (t, gm2) = action.act_monomial(ctx, g, m2);
            let (t2, m) = monomial_product(ctx, m1, &gm2);
            out.add_term(m, group.mul(g, h), c1.mul(c2).mul(&t).mul(&t2));
        }
    }
    out
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((m, g), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}#{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
