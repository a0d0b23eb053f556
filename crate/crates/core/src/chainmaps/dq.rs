//! Quantum difference quotients `∂_[i]`, the operators `τ_j`, the twisted flip
//! `σ_p`, and the forms of `t` and `Ψ` written with them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::algebra::{add_q, monomial_product, AlgebraElement, ExtIndex, Monomial, QContext, Twister};
use crate::complexes::{Chain, KoszulElem};
use crate::scalar::Scalar;

/// An element of `A ⊗ A` with componentwise product.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct EnvElem {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl EnvElem {
    pub fn zero() -> Self {
        EnvElem::default()
    }

    pub fn term(c: Scalar, a: Monomial, b: Monomial) -> Self {
        let mut e = EnvElem::zero();
        e.add_term(a, b, c);
        e
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &EnvElem) -> EnvElem {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &EnvElem) -> EnvElem {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> EnvElem {
        let mut out = EnvElem::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c.mul(s));
        }
        out
    }

    /// `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`.
    pub fn mul(&self, ctx: &QContext, other: &EnvElem) -> EnvElem {
        let mut out = EnvElem::zero();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let (t1, a3) = monomial_product(ctx, a, a2);
                let (t2, b3) = monomial_product(ctx, b, b2);
                out.add_term(a3, b3, c.mul(c2).mul(&t1).mul(&t2));
            }
        }
        out
    }
}

impl fmt::Display for EnvElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{a}⊗{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EnvElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `τ_j`: moves the `x_j` part of each left factor to the right factor.
pub fn tau(ctx: &QContext, j: usize, x: &EnvElem) -> EnvElem {
    let n = ctx.n();
    let mut out = EnvElem::zero();
    for ((u, v), c) in x.terms() {
        let k = u.exp(j);
        if k == 0 {
            out.add_term(u.clone(), v.clone(), c.clone());
            continue;
        }
        let u2 = u.with_exp(j, 0);
        let v2 = v.mul(&Monomial::var_pow(n, j, k));
        let mut old = Twister::new(n);
        old.push_monomial(u);
        old.push_monomial(v);
        let mut new = Twister::new(n);
        new.push_monomial(&u2);
        new.push_monomial(&v2);
        out.add_term(u2, v2, c.mul(&ctx.twist(&old.ratio_exps(&new))));
    }
    out
}

/// `∂_[i](x^l) = Σ_r c_r x_i^{l_i-r} x_{>i}^l ⊗ x_{<i}^l x_i^{r-1}`.
pub fn dq(ctx: &QContext, i: usize, m: &Monomial) -> EnvElem {
    let n = ctx.n();
    let mut out = EnvElem::zero();
    let li = m.exp(i);
    if li == 0 {
        return out;
    }
    let mut extra = vec![0i32; ctx.slot_count()];
    for s in 1..i {
        add_q(&mut extra, s, i, m.exp(s) as i32);
    }
    for r in 1..=li {
        let a = m.restrict(i + 1, n).with_exp(i, li - r);
        let b = m.restrict(1, i - 1).with_exp(i, r - 1);
        let mut tw = Twister::new(n);
        tw.push_monomial(&a);
        tw.push_monomial(&b);
        let mut e = extra.clone();
        for (x, y) in e.iter_mut().zip(tw.exps()) {
            *x -= y;
        }
        out.add_term(a, b, ctx.twist(&e));
    }
    out
}

/// `∂_[i]` extended linearly.
pub fn dq_element(ctx: &QContext, i: usize, f: &AlgebraElement) -> EnvElem {
    let mut out = EnvElem::zero();
    for (m, c) in f.terms() {
        out = out.add(&dq(ctx, i, m).scale(c));
    }
    out
}

/// An element of `A ⊗ A ⊗ Λ^p(V)`, keyed `(u, v, J)`.
pub type EnvWedge = BTreeMap<(Monomial, Monomial, ExtIndex), Scalar>;

fn add_env_wedge(x: &mut EnvWedge, key: (Monomial, Monomial, ExtIndex), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match x.entry(key) {
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

/// `c([v, J]) / c([J, v])`, the coefficient of `σ(1 ⊗ v ⊗ x_J) = · ⊗ x_J ⊗ v`.
fn sigma_coeff(ctx: &QContext, v: &Monomial, j: ExtIndex) -> Scalar {
    let n = ctx.n();
    let mut a = Twister::new(n);
    a.push_monomial(v);
    a.push_letters(j.indices());
    let mut b = Twister::new(n);
    b.push_letters(j.indices());
    b.push_monomial(v);
    ctx.twist(&a.ratio_exps(&b))
}

/// `σ_p: A ⊗ A ⊗ Λ^p → A ⊗ Λ^p ⊗ A`.
pub fn sigma(ctx: &QContext, p: usize, x: &EnvWedge) -> KoszulElem {
    let mut out = Chain::zero(ctx.n(), p as i32);
    for ((u, v, j), c) in x {
        out.add_term(u.clone(), *j, v.clone(), c.mul(&sigma_coeff(ctx, v, *j)));
    }
    out
}

/// The inverse of `σ_p`.
pub fn sigma_inv(ctx: &QContext, x: &KoszulElem) -> EnvWedge {
    let mut out = EnvWedge::new();
    for ((u, j, v), c) in x.terms() {
        let k = sigma_coeff(ctx, v, *j).inv().expect("unit");
        add_env_wedge(&mut out, (u.clone(), v.clone(), *j), c.mul(&k));
    }
    out
}

/// The contraction `t_p` written with difference quotients, on
/// `A ⊗ A ⊗ Λ^p`, extended left-linearly.
pub fn t_via_dq(ctx: &QContext, x: &EnvWedge) -> EnvWedge {
    let n = ctx.n();
    let mut out = EnvWedge::new();
    for ((u, v, jset), c) in x {
        let p = jset.len();
        let sign = if p % 2 == 0 { Scalar::from_int(-1) } else { Scalar::one() };
        for j in jset.max_index().unwrap_or(0) + 1..=n {
            let mut e = vec![0i32; ctx.slot_count()];
            for t in 1..=n {
                add_q(&mut e, j, t, v.exp(t) as i32);
            }
            for t in jset.indices() {
                add_q(&mut e, j, t, 1);
            }
            let pre = ctx.twist(&e).mul(&sign).mul(c);
            for ((a, b), d) in dq(ctx, j, v).terms() {
                let (t1, ua) = monomial_product(ctx, u, a);
                add_env_wedge(&mut out, (ua, b.clone(), jset.with(j)), pre.mul(d).mul(&t1));
            }
        }
    }
    out
}

/// `Ψ_p(1 ⊗ 1 ⊗ w)` written with difference quotients, on `A ⊗ A ⊗ Λ^p`.
pub fn psi_via_dq(ctx: &QContext, w: &[Monomial]) -> EnvWedge {
    let n = ctx.n();
    let p = w.len();
    let mut out = EnvWedge::new();
    if p == 0 {
        add_env_wedge(&mut out, (Monomial::one(n), Monomial::one(n), ExtIndex::empty()), Scalar::one());
        return out;
    }
    let mut whole = Twister::new(n);
    for m in w {
        whole.push_monomial(m);
    }
    for js in (1..=n).combinations(p) {
        if js.iter().zip(w).any(|(&j, m)| m.exp(j) == 0) {
            continue;
        }
        let jset = ExtIndex::from_indices(&js);
        let quotients: Vec<Vec<((Monomial, Monomial), Scalar)>> = js
            .iter()
            .zip(w)
            .map(|(&j, m)| dq(ctx, j, m).terms().map(|(k, c)| (k.clone(), c.clone())).collect())
            .collect();
        for pick in quotients.iter().map(|q| q.iter()).multi_cartesian_product() {
            // x^{l^1} ... x^{l^p} = μ (Π a_s)(Π b_s) x_{j_1} ... x_{j_p}, where the
            // primed product carries the coefficients of the chosen terms.
            let mut coeff = Scalar::one();
            let mut primed = Twister::new(n);
            let mut left = Twister::new(n);
            let mut right = Twister::new(n);
            for ((a, _), c) in &pick {
                coeff = coeff.mul(c);
                primed.push_monomial(a);
                left.push_monomial(a);
            }
            for ((_, b), _) in &pick {
                primed.push_monomial(b);
                right.push_monomial(b);
            }
            primed.push_letters(js.iter().copied());
            let mu = ctx.twist(&whole.ratio_exps(&primed)).mul(&coeff.inv().expect("unit"));
            // Componentwise product in A ⊗ A.
            let prod = coeff.mul(&ctx.twist(left.exps())).mul(&ctx.twist(right.exps()));
            add_env_wedge(&mut out, (left.monomial(), right.monomial(), jset), mu.mul(&prod));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainmaps::psi;
    use crate::complexes::{bar_words, koszul_t};

    #[test]
    fn dq_examples() {
        let cl = QContext::classical(2);
        let one = Monomial::one(2);
        let x = |i| Monomial::var(2, i);
        let f = Monomial::from_exps(&[2, 1]);
        let mut e = EnvElem::term(Scalar::one(), Monomial::from_exps(&[1, 1]), one.clone());
        e.add_term(x(2), x(1), Scalar::one());
        assert_eq!(dq(&cl, 1, &f), e);
        assert_eq!(dq(&cl, 2, &f), EnvElem::term(Scalar::one(), one.clone(), Monomial::var_pow(2, 1, 2)));

        let ctx = QContext::symbolic(2, 1).unwrap();
        let q = ctx.q(1, 2);
        let mut e = EnvElem::term(q.mul(&q), x(2), x(1));
        e.add_term(one.clone(), Monomial::from_exps(&[1, 1]), q.clone());
        assert_eq!(dq(&ctx, 2, &Monomial::from_exps(&[1, 2])), e);
    }

    #[test]
    fn tau_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let one = Monomial::one(2);
        let q = ctx.q(1, 2);
        let got = tau(&ctx, 1, &EnvElem::term(Scalar::one(), Monomial::from_exps(&[1, 2]), one));
        assert_eq!(got, EnvElem::term(q.mul(&q), Monomial::var_pow(2, 2, 2), Monomial::var(2, 1)));
    }

    #[test]
    fn sigma_example_and_round_trip() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let mut x = EnvWedge::new();
        x.insert((Monomial::one(2), Monomial::var(2, 2), ExtIndex::single(1)), Scalar::one());
        let s = sigma(&ctx, 1, &x);
        let e = Chain::term(
            2,
            1,
            ctx.q(1, 2).inv().unwrap(),
            Monomial::one(2),
            ExtIndex::single(1),
            Monomial::var(2, 2),
        );
        assert_eq!(s, e);
        assert_eq!(sigma_inv(&ctx, &s), x);
    }

    #[test]
    fn dq_forms_agree_small() {
        let ctx = QContext::symbolic(3, 1).unwrap();
        for p in 0..=2 {
            for jset in ExtIndex::all_of_len(3, p) {
                for v in Monomial::up_to_degree(3, 0, 3) {
                    let mut y = EnvWedge::new();
                    y.insert((Monomial::one(3), v, jset), Scalar::one());
                    assert_eq!(sigma(&ctx, p + 1, &t_via_dq(&ctx, &y)), koszul_t(&ctx, &sigma(&ctx, p, &y)));
                }
            }
        }
        for p in 1..=2 {
            for w in bar_words(3, p, 2) {
                assert_eq!(sigma(&ctx, p, &psi_via_dq(&ctx, &w)), psi(&ctx, &w), "{w:?}");
            }
        }
    }
}
