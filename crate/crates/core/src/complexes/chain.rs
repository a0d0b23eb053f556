use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::algebra::{monomial_product, AlgebraElement, ExtIndex, Monomial, QContext};
use crate::scalar::Scalar;

/// The middle factor of a free bimodule generator `1 ⊗ b ⊗ 1`.
pub trait ChainBasis: Clone + Ord + Hash + Default + fmt::Debug + Send + Sync {
    /// Text form used in reports, e.g. `x1^x3` or `[x1|x2^2]`.
    fn render(&self) -> String;
}

impl ChainBasis for ExtIndex {
    fn render(&self) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("x{i}")).collect();
        parts.join("^")
    }
}

/// A tensor word `a_1 ⊗ ... ⊗ a_p` of nonconstant monomials.
pub type Word = Vec<Monomial>;

impl ChainBasis for Word {
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|m| m.to_string()).collect();
        format!("[{}]", parts.join("|"))
    }
}

/// A homogeneous element of a free resolution `A ⊗ M_p ⊗ A`: a sum of
/// `c * u ⊗ b ⊗ v`. Degree `-1` stands for the augmentation target `A`; an
/// algebra element `a` is then stored as `a ⊗ () ⊗ 1`.
#[derive(Clone)]
pub struct Chain<B> {
    n: usize,
    degree: i32,
    terms: BTreeMap<(Monomial, B, Monomial), Scalar>,
}

impl<B: ChainBasis> Chain<B> {
    pub fn zero(n: usize, degree: i32) -> Self {
        Chain {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ b ⊗ 1`.
    pub fn basis(n: usize, degree: i32, b: B) -> Self {
        Chain::term(n, degree, Scalar::one(), Monomial::one(n), b, Monomial::one(n))
    }

    pub fn term(n: usize, degree: i32, c: Scalar, u: Monomial, b: B, v: Monomial) -> Self {
        let mut x = Chain::zero(n, degree);
        x.add_term(u, b, v, c);
        x
    }

    pub fn from_algebra(a: &AlgebraElement) -> Self {
        let mut x = Chain::zero(0, -1);
        for (m, c) in a.terms() {
            x.n = m.n();
            x.add_term(m.clone(), B::default(), Monomial::one(m.n()), c.clone());
        }
        x
    }

    /// The algebra element of a degree `-1` chain.
    pub fn to_algebra(&self) -> AlgebraElement {
        debug_assert_eq!(self.degree, -1);
        AlgebraElement::from_terms(self.terms.iter().map(|((u, _, _), c)| (u.clone(), c.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn with_degree(mut self, degree: i32) -> Self {
        self.degree = degree;
        self
    }

    pub fn add_term(&mut self, u: Monomial, b: B, v: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, b, v)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, B, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Monomial, b: &B, v: &Monomial) -> Scalar {
        self.terms.get(&(u.clone(), b.clone(), v.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Chain<B>, c: &Scalar) {
        if self.terms.is_empty() {
            self.n = other.n;
        }
        for ((u, b, v), d) in &other.terms {
            self.add_term(u.clone(), b.clone(), v.clone(), d.mul(c));
        }
    }

    pub fn add(&self, other: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn neg(&self) -> Chain<B> {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Chain<B> {
        let mut out = Chain::zero(self.n, self.degree);
        out.add_scaled(self, c);
        out
    }

    /// `c * u · self · v` for the bimodule structure of the free resolution.
    pub fn bimodule(&self, ctx: &QContext, c: &Scalar, u: &Monomial, v: &Monomial) -> Chain<B> {
        let mut out = Chain::zero(self.n, self.degree);
        for ((l, b, r), d) in &self.terms {
            let (t1, l2) = monomial_product(ctx, u, l);
            if self.degree == -1 {
                let (t2, m) = monomial_product(ctx, &l2, v);
                out.add_term(m, b.clone(), r.clone(), d.mul(c).mul(&t1).mul(&t2));
            } else {
                let (t2, r2) = monomial_product(ctx, r, v);
                out.add_term(l2, b.clone(), r2, d.mul(c).mul(&t1).mul(&t2));
            }
        }
        out
    }

    /// Applies a map to every coefficient (e.g. specialization).
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Chain<B> {
        let mut out = Chain::zero(self.n, self.degree);
        for ((u, b, v), c) in &self.terms {
            out.add_term(u.clone(), b.clone(), v.clone(), f(c));
        }
        out
    }
}

impl<B: ChainBasis> PartialEq for Chain<B> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.terms == other.terms
    }
}

impl<B: ChainBasis> Eq for Chain<B> {}

impl<B: ChainBasis> fmt::Display for Chain<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((u, b, v), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if self.degree == -1 {
                write!(f, "({c})*{u}")?;
            } else {
                write!(f, "({c})*{u}⊗{}⊗{v}", b.render())?;
            }
        }
        Ok(())
    }
}

impl<B: ChainBasis> fmt::Debug for Chain<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {self}", self.degree)
    }
}

/// Converts a degree `-1` chain between resolutions.
pub fn recast_algebra<B: ChainBasis, C: ChainBasis>(x: &Chain<B>) -> Chain<C> {
    let mut out = Chain::<C>::from_algebra(&x.to_algebra());
    out.n = x.n;
    out
}

/// A free bimodule resolution of `A` with a left-linear contraction.
pub trait Resolution: Sync {
    type Basis: ChainBasis;

    fn ctx(&self) -> &QContext;

    /// `d(1 ⊗ b ⊗ 1)` for `b` of degree `p >= 1`.
    fn d_basis(&self, p: i32, b: &Self::Basis) -> Chain<Self::Basis>;

    /// The contraction on `1 ⊗ b ⊗ v`, `b` of degree `p >= 0`.
    fn contract_basis(&self, p: i32, b: &Self::Basis, v: &Monomial) -> Chain<Self::Basis>;

    /// The differential; `d_0` is multiplication into `A`.
    fn d(&self, x: &Chain<Self::Basis>) -> Chain<Self::Basis> {
        let ctx = self.ctx();
        let n = ctx.n();
        let p = x.degree();
        assert!(p >= 0, "no differential below degree 0");
        let mut out = Chain::zero(n, p - 1);
        for ((u, b, v), c) in x.terms() {
            if p == 0 {
                let (t, m) = monomial_product(ctx, u, v);
                out.add_term(m, Self::Basis::default(), Monomial::one(n), c.mul(&t));
            } else {
                out.add_scaled(&self.d_basis(p, b).bimodule(ctx, c, u, v), &Scalar::one());
            }
        }
        out
    }

    /// The contraction, extended left-linearly; on degree `-1` it is
    /// `a ↦ a ⊗ 1`.
    fn contract(&self, x: &Chain<Self::Basis>) -> Chain<Self::Basis> {
        let ctx = self.ctx();
        let n = ctx.n();
        let p = x.degree();
        let mut out = Chain::zero(n, p + 1);
        for ((u, b, v), c) in x.terms() {
            if p == -1 {
                out.add_term(u.clone(), Self::Basis::default(), Monomial::one(n), c.clone());
            } else {
                let one = Monomial::one(n);
                out.add_scaled(&self.contract_basis(p, b, v).bimodule(ctx, c, u, &one), &Scalar::one());
            }
        }
        out
    }

    /// The homotopy residual `(t d + d t - Id)(x)`; zero iff the identity
    /// holds on `x`. At degree `-1` only `d t - Id` is formed.
    fn homotopy_residual(&self, x: &Chain<Self::Basis>) -> Chain<Self::Basis> {
        let dt = self.d(&self.contract(x));
        let mut r = dt.sub(x);
        if x.degree() >= 0 {
            let td = self.contract(&self.d(x));
            r = r.add(&td);
        }
        r
    }
}
