//! Finite abelian groups given by cyclic factors, and their actions on
//! `S_q(V)` either diagonally (by characters) or by monomial matrices.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{Cyc, Rational, Scalar};

use super::context::{QContext, Twister};
use super::element::{multiply, AlgebraElement};
use super::exterior::{wedge_reorder, ExtIndex};
use super::monomial::Monomial;

/// `Z/n_1 x ... x Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    orders: Vec<u32>,
}

/// Exponent vector reduced modulo the cyclic orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(SmallVec<[u32; 2]>);

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidParameters("cyclic orders must be positive".into()));
        }
        Ok(GroupSpec { orders })
    }

    pub fn trivial() -> Self {
        GroupSpec { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(SmallVec::from_elem(0, self.orders.len()))
    }

    pub fn generator(&self, k: usize) -> GroupElement {
        let mut g = self.identity();
        g.0[k] = 1 % self.orders[k];
        g
    }

    pub fn element(&self, exps: &[i64]) -> Result<GroupElement> {
        if exps.len() != self.orders.len() {
            return Err(Error::InvalidParameters(format!(
                "group element needs {} components, got {}",
                self.orders.len(),
                exps.len()
            )));
        }
        Ok(GroupElement(
            exps.iter()
                .zip(&self.orders)
                .map(|(&e, &o)| e.rem_euclid(o as i64) as u32)
                .collect(),
        ))
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), o)| (x + y) % o)
                .collect(),
        )
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(x, o)| (o - x) % o).collect())
    }

    /// All elements, in lexicographic order of exponent vectors.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        for (k, &o) in self.orders.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for g in &out {
                for e in 0..o {
                    let mut h = g.clone();
                    h.0[k] = e;
                    next.push(h);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn lcm_order(&self) -> u32 {
        self.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }
}

impl GroupElement {
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "g({})", parts.join(","))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// How the group generators act on `x_1, ..., x_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionSpec {
    /// `chi_i(g_k) = zeta^{E[i][k]}`; `E` is `N x k`.
    Diagonal(Vec<Vec<i64>>),
    /// For each generator, the image of each `x_i` as `(c, sigma(i))`, meaning
    /// `g . x_i = c * x_sigma(i)`.
    MonomialMatrix(Vec<Vec<(Cyc, usize)>>),
}

/// A validated action: for each group element, the image `c_i x_sigma(i)` of
/// every generator.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: GroupSpec,
    diagonal: bool,
    elements: Vec<GroupElement>,
    /// Indexed like `elements`; entry `i-1` is `(c_i, sigma(i))`.
    images: Vec<Vec<(Cyc, usize)>>,
}

impl GroupAction {
    pub fn trivial(n: usize) -> Self {
        let group = GroupSpec::trivial();
        GroupAction {
            elements: group.elements(),
            images: vec![(1..=n).map(|i| (Cyc::one(), i)).collect()],
            group,
            diagonal: true,
        }
    }

    /// Builds and validates an action (`validate_action`): generator images
    /// must preserve every relation `x_i x_j - q_ij x_j x_i`, have the declared
    /// orders, and commute with each other.
    pub fn new(ctx: &QContext, group: GroupSpec, spec: &ActionSpec) -> Result<Self> {
        let n = ctx.n();
        if !ctx.order().is_multiple_of(group.lcm_order()) {
            return Err(Error::InvalidParameters(format!(
                "group exponent {} does not divide the cyclotomic order {}",
                group.lcm_order(),
                ctx.order()
            )));
        }
        let k = group.orders().len();
        let (gens, diagonal): (Vec<Vec<(Cyc, usize)>>, bool) = match spec {
            ActionSpec::Diagonal(e) => {
                if e.len() != n || e.iter().any(|row| row.len() != k) {
                    return Err(Error::InvalidParameters(format!(
                        "character matrix must be {n} x {k}"
                    )));
                }
                let mut gens = Vec::with_capacity(k);
                for (j, &o) in group.orders().iter().enumerate() {
                    let mut img = Vec::with_capacity(n);
                    for (i, row) in e.iter().enumerate() {
                        if (row[j] * o as i64).rem_euclid(ctx.order() as i64) != 0 {
                            return Err(Error::ActionViolation(format!(
                                "chi_{}(g_{}) = zeta^{} has order not dividing {o}",
                                i + 1,
                                j + 1,
                                row[j]
                            )));
                        }
                        img.push((ctx.zeta_pow(row[j]), i + 1));
                    }
                    gens.push(img);
                }
                (gens, true)
            }
            ActionSpec::MonomialMatrix(g) => {
                if g.len() != k || g.iter().any(|img| img.len() != n) {
                    return Err(Error::InvalidParameters(format!(
                        "need images of {n} generators for each of {k} group generators"
                    )));
                }
                for img in g {
                    let mut seen = vec![false; n];
                    for (c, s) in img {
                        ctx.check_index(*s)?;
                        if seen[s - 1] {
                            return Err(Error::ActionViolation("generator images are not a permutation".into()));
                        }
                        seen[s - 1] = true;
                        if c.is_zero() {
                            return Err(Error::ActionViolation("zero coefficient in generator image".into()));
                        }
                        if c.order() != 1 && c.order() != ctx.order() {
                            return Err(Error::InvalidParameters(format!(
                                "coefficient {c} does not lie in Q(zeta_{})",
                                ctx.order()
                            )));
                        }
                    }
                }
                let diagonal = g.iter().all(|img| img.iter().enumerate().all(|(i, (_, s))| *s == i + 1));
                (g.clone(), diagonal)
            }
        };
        // Relations.
        for (gi, img) in gens.iter().enumerate() {
            for i in 1..=n {
                for j in i + 1..=n {
                    let (ci, si) = &img[i - 1];
                    let (cj, sj) = &img[j - 1];
                    let xi = AlgebraElement::term(Scalar::from_cyc(ci.clone()), Monomial::var(n, *si));
                    let xj = AlgebraElement::term(Scalar::from_cyc(cj.clone()), Monomial::var(n, *sj));
                    let lhs = multiply(ctx, &xi, &xj);
                    let rhs = multiply(ctx, &xj, &xi).scale(&ctx.q(i, j));
                    if !lhs.sub(&rhs).is_zero() {
                        return Err(Error::ActionViolation(format!(
                            "generator {} does not preserve x{i}*x{j} - q{i}{j}*x{j}*x{i}",
                            gi + 1
                        )));
                    }
                }
            }
        }
        // Orders and commutation.
        let identity: Vec<(Cyc, usize)> = (1..=n).map(|i| (Cyc::one(), i)).collect();
        for (gi, img) in gens.iter().enumerate() {
            let mut pow = identity.clone();
            for _ in 0..group.orders()[gi] {
                pow = compose(img, &pow);
            }
            if pow != identity {
                return Err(Error::ActionViolation(format!(
                    "generator {} does not have order {}",
                    gi + 1,
                    group.orders()[gi]
                )));
            }
            for other in &gens[gi + 1..] {
                if compose(img, other) != compose(other, img) {
                    return Err(Error::ActionViolation("generator images do not commute".into()));
                }
            }
        }
        let elements = group.elements();
        let images = elements
            .iter()
            .map(|g| {
                let mut img = identity.clone();
                for (gi, &e) in g.exps().iter().enumerate() {
                    for _ in 0..e {
                        img = compose(&gens[gi], &img);
                    }
                }
                img
            })
            .collect();
        Ok(GroupAction {
            group,
            diagonal,
            elements,
            images,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    pub fn is_trivial(&self) -> bool {
        self.group.size() == 1
    }

    fn index_of(&self, g: &GroupElement) -> usize {
        self.elements.binary_search(g).expect("element of this group")
    }

    /// `(c_i, sigma(i))` with `g . x_i = c_i x_sigma(i)`.
    pub fn image(&self, g: &GroupElement, i: usize) -> &(Cyc, usize) {
        &self.images[self.index_of(g)][i - 1]
    }

    /// `chi_i(g)` for a diagonal action.
    pub fn chi(&self, g: &GroupElement, i: usize) -> Cyc {
        debug_assert!(self.diagonal);
        self.image(g, i).0.clone()
    }

    /// `chi_l(g) = prod chi_i(g)^{l_i}`.
    pub fn chi_monomial(&self, g: &GroupElement, m: &Monomial) -> Cyc {
        let mut acc = Cyc::one();
        for i in m.support() {
            acc = acc.mul(&self.chi(g, i).pow(m.exp(i) as i64).expect("unit"));
        }
        acc
    }

    /// `chi_I(g) = prod_{i in I} chi_i(g)`.
    pub fn chi_index(&self, g: &GroupElement, idx: ExtIndex) -> Cyc {
        let mut acc = Cyc::one();
        for i in idx.indices() {
            acc = acc.mul(&self.chi(g, i));
        }
        acc
    }

    /// `g . x^l = c x^{l'}`.
    pub fn act_monomial(&self, ctx: &QContext, g: &GroupElement, m: &Monomial) -> (Scalar, Monomial) {
        let img = &self.images[self.index_of(g)];
        let mut coeff = Cyc::one();
        let mut tw = Twister::new(ctx.n());
        for i in m.support() {
            let (c, s) = &img[i - 1];
            let k = m.exp(i);
            coeff = coeff.mul(&c.pow(k as i64).expect("unit"));
            tw.push_power(*s, k);
        }
        (ctx.twist(tw.exps()).scale_cyc(&coeff), tw.monomial())
    }

    /// `act(g, a)`.
    pub fn act(&self, ctx: &QContext, g: &GroupElement, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_terms(a.terms().map(|(m, c)| {
            let (t, m2) = self.act_monomial(ctx, g, m);
            (m2, c.mul(&t))
        }))
    }

    /// `g . (x_i1 ∧ ... ∧ x_ip)` in `Λ_q(V)`.
    pub fn act_wedge(&self, ctx: &QContext, g: &GroupElement, idx: ExtIndex) -> Option<(Scalar, ExtIndex)> {
        let img = &self.images[self.index_of(g)];
        let mut coeff = Cyc::one();
        let mut word = Vec::with_capacity(idx.len());
        for i in idx.indices() {
            let (c, s) = &img[i - 1];
            coeff = coeff.mul(c);
            word.push(*s);
        }
        let (t, out) = wedge_reorder(ctx, &word)?;
        Some((t.scale_cyc(&coeff), out))
    }

    /// `g . (dx_i1 ∧ ... ∧ dx_ip)` in `Λ_{q^-1}(V*)`, where `g . dx_sigma(i) =
    /// c_i^-1 dx_sigma(i)` is the contragredient action.
    pub fn act_dual_wedge(&self, ctx: &QContext, g: &GroupElement, idx: ExtIndex) -> Option<(Scalar, ExtIndex)> {
        let img = &self.images[self.index_of(g)];
        let mut coeff = Cyc::one();
        let mut word = Vec::with_capacity(idx.len());
        for i in idx.indices() {
            let (c, s) = &img[i - 1];
            coeff = coeff.mul(&c.inv().expect("unit"));
            word.push(*s);
        }
        let (t, out) = super::exterior::ext_reorder(ctx, &word)?;
        Some((t.scale_cyc(&coeff), out))
    }

    /// `1 / |G|` as a scalar.
    pub fn inv_size(&self) -> Scalar {
        Scalar::from_rational(Rational::new(1, self.group.size() as i128))
    }
}

/// `(g o h)(x_i) = g(h(x_i))` for images given as `(c, sigma)`.
fn compose(g: &[(Cyc, usize)], h: &[(Cyc, usize)]) -> Vec<(Cyc, usize)> {
    h.iter()
        .map(|(c, s)| {
            let (c2, s2) = &g[s - 1];
            (c.mul(c2), *s2)
        })
        .collect()
}
