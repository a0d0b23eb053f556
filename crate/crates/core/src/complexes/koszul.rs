//! The quantum Koszul resolution `K_p = A ⊗ Λ_q^p(V) ⊗ A` and its contraction.

use crate::algebra::{add_q, ExtIndex, Monomial, QContext, Twister};
use crate::scalar::Scalar;

use super::chain::{Chain, Resolution};

pub type KoszulElem = Chain<ExtIndex>;

#[derive(Clone, Copy, Debug)]
pub struct Koszul<'a> {
    ctx: &'a QContext,
}

impl<'a> Koszul<'a> {
    pub fn new(ctx: &'a QContext) -> Self {
        Koszul { ctx }
    }

    /// `1 ⊗ x_J ⊗ x^l`.
    pub fn element(&self, j: ExtIndex, right: Monomial) -> KoszulElem {
        let n = self.ctx.n();
        Chain::term(n, j.len() as i32, Scalar::one(), Monomial::one(n), j, right)
    }
}

fn sign(k: usize) -> Scalar {
    Scalar::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

impl Resolution for Koszul<'_> {
    type Basis = ExtIndex;

    fn ctx(&self) -> &QContext {
        self.ctx
    }

    fn d_basis(&self, p: i32, b: &ExtIndex) -> KoszulElem {
        let ctx = self.ctx;
        let n = ctx.n();
        let js = b.indices();
        let one = Monomial::one(n);
        let mut out = Chain::zero(n, p - 1);
        for (i, &ji) in js.iter().enumerate() {
            let rest = b.without(ji);
            let s = sign(i);
            let mut left = vec![0i32; ctx.slot_count()];
            for &js_ in &js[..=i] {
                add_q(&mut left, js_, ji, 1);
            }
            let mut right = vec![0i32; ctx.slot_count()];
            for &js_ in &js[i..] {
                add_q(&mut right, ji, js_, 1);
            }
            out.add_term(Monomial::var(n, ji), rest, one.clone(), ctx.twist(&left).mul(&s));
            out.add_term(one.clone(), rest, Monomial::var(n, ji), ctx.twist(&right).mul(&s).neg());
        }
        out
    }

    fn contract_basis(&self, p: i32, b: &ExtIndex, v: &Monomial) -> KoszulElem {
        let ctx = self.ctx;
        let n = ctx.n();
        let js = b.indices();
        let mut out = Chain::zero(n, p + 1);
        let mut old = Twister::new(n);
        old.push_letters(js.iter().copied());
        old.push_monomial(v);
        let s = sign(p as usize + 1);
        for j in b.max_index().unwrap_or(0) + 1..=n {
            let lj = v.exp(j);
            for r in 1..=lj {
                let u = v.restrict(j + 1, n).with_exp(j, lj - r);
                let w = v.restrict(1, j - 1).with_exp(j, r - 1);
                let mut new = Twister::new(n);
                new.push_monomial(&u);
                new.push_letters(js.iter().copied());
                new.push_letter(j);
                new.push_monomial(&w);
                let lambda = ctx.twist(&old.ratio_exps(&new));
                out.add_term(u, b.with(j), w, lambda.mul(&s));
            }
        }
        out
    }
}

/// `d` on the Koszul resolution.
pub fn koszul_d(ctx: &QContext, x: &KoszulElem) -> KoszulElem {
    Koszul::new(ctx).d(x)
}

/// The contraction `t` on the Koszul resolution.
pub fn koszul_t(ctx: &QContext, x: &KoszulElem) -> KoszulElem {
    Koszul::new(ctx).contract(x)
}

/// Left-module basis elements `1 ⊗ x_J ⊗ x^l` with `|J| = p`, `|l| <= max_deg`.
pub fn koszul_left_basis(n: usize, p: usize, max_deg: u32) -> Vec<(ExtIndex, Monomial)> {
    let mut out = Vec::new();
    for j in ExtIndex::all_of_len(n, p) {
        for m in Monomial::up_to_degree(n, 0, max_deg) {
            out.push((j, m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;

    fn q12(ctx: &QContext) -> Scalar {
        ctx.q(1, 2)
    }

    #[test]
    fn d1_and_d2() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let k = Koszul::new(&ctx);
        let one = Monomial::one(2);
        let x = |i| Monomial::var(2, i);
        let d1 = k.d(&k.element(ExtIndex::single(1), one.clone()));
        let mut e = Chain::zero(2, 0);
        e.add_term(x(1), ExtIndex::empty(), one.clone(), Scalar::one());
        e.add_term(one.clone(), ExtIndex::empty(), x(1), Scalar::from_int(-1));
        assert_eq!(d1, e);

        let d2 = k.d(&k.element(ExtIndex::from_indices(&[1, 2]), one.clone()));
        let (e1, e2) = (ExtIndex::single(1), ExtIndex::single(2));
        let mut e = Chain::zero(2, 1);
        e.add_term(x(1), e2, one.clone(), Scalar::one());
        e.add_term(x(2), e1, one.clone(), q12(&ctx).neg());
        e.add_term(one.clone(), e2, x(1), q12(&ctx).neg());
        e.add_term(one.clone(), e1, x(2), Scalar::one());
        assert_eq!(d2, e);
    }

    #[test]
    fn t_low_degrees() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let k = Koszul::new(&ctx);
        let one = Monomial::one(2);
        let t = k.contract(&Chain::from_algebra(&AlgebraElement::one(2)));
        assert_eq!(t, k.element(ExtIndex::empty(), one.clone()));

        let t0 = k.contract(&k.element(ExtIndex::empty(), Monomial::from_exps(&[1, 1])));
        let mut e = Chain::zero(2, 1);
        e.add_term(Monomial::var(2, 2), ExtIndex::single(1), one.clone(), q12(&ctx).neg());
        e.add_term(one.clone(), ExtIndex::single(2), Monomial::var(2, 1), q12(&ctx).neg());
        assert_eq!(t0, e);
    }

    #[test]
    fn d_squared_and_homotopy_small() {
        let ctx = QContext::symbolic(3, 1).unwrap();
        let k = Koszul::new(&ctx);
        for p in 0..=3 {
            for (j, m) in koszul_left_basis(3, p, 3) {
                let x = k.element(j, m);
                if p >= 1 {
                    assert!(k.d(&k.d(&x)).is_zero());
                }
                assert!(k.homotopy_residual(&x).is_zero(), "{x:?}");
            }
        }
    }
}
