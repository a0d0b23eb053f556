//! The Schouten–Nijenhuis bracket of polyvector fields on `k[x_1, ..., x_N]`,
//! computed with odd variables `ξ_i = ∂/∂x_i`. Used as an independent check of
//! the `q = 1` brackets.

use crate::algebra::{ExtIndex, Monomial, QContext};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::cochain::KoszulCochain;

/// `ξ_I ← ∂/∂ξ_i`: `None` if `i ∉ I`, else the sign and `I \ {i}`.
fn right_xi_derivative(idx: ExtIndex, i: usize) -> Option<(i64, ExtIndex)> {
    if !idx.contains(i) {
        return None;
    }
    let after = idx.len() - idx.count_below(i) - 1;
    Some((if after.is_multiple_of(2) { 1 } else { -1 }, idx.without(i)))
}

/// `∂/∂x_i x^a`.
fn x_derivative(a: &Monomial, i: usize) -> Option<(i64, Monomial)> {
    let e = a.exp(i);
    (e > 0).then(|| (e as i64, a.with_exp(i, e - 1)))
}

/// `ξ_A ξ_B = sign ξ_{A ∪ B}`, or `None` if they overlap.
fn xi_product(a: ExtIndex, b: ExtIndex) -> Option<(i64, ExtIndex)> {
    if a.intersects(b) {
        return None;
    }
    let mut inv = 0;
    for j in b.indices() {
        inv += a.len() - a.count_below(j);
    }
    Some((if inv % 2 == 0 { 1 } else { -1 }, a.union(b)))
}

/// `Σ_i (P ← ∂_{ξ_i})(∂_{x_i} Q)`.
fn half(p: &KoszulCochain, q: &KoszulCochain, n: usize, out: &mut KoszulCochain, sign: &Scalar) {
    for ((a, i_set), c) in p.terms() {
        for ((b, l_set), d) in q.terms() {
            for i in 1..=n {
                let Some((s1, rest)) = right_xi_derivative(*i_set, i) else { continue };
                let Some((s2, db)) = x_derivative(b, i) else { continue };
                let Some((s3, wedge)) = xi_product(rest, *l_set) else { continue };
                let k = Scalar::from_int(s1 * s2 * s3).mul(c).mul(d).mul(sign);
                out.add_term(a.mul(&db), wedge, k);
            }
        }
    }
}

/// `[P, Q] = (-1)^{(p-1)(q-1)} Σ_i (P ← ∂_{ξ_i})(∂_{x_i} Q) - (Q ← ∂_{ξ_i})(∂_{x_i} P)`.
///
/// This is the sign convention in which inserting `Q` into slot `k` of `P`
/// carries `(-1)^{(q-1)(k-1)}`, as for circle products. The other common
/// convention differs by `(-1)^{(p-1)(q-1)}`; the two agree on vector fields.
pub fn schouten_classical(ctx: &QContext, alpha: &KoszulCochain, beta: &KoszulCochain) -> Result<KoszulCochain> {
    if !ctx.is_classical() {
        return Err(Error::NotClassical);
    }
    let (p, q) = (alpha.degree(), beta.degree());
    let mut out = KoszulCochain::zero((p + q).saturating_sub(1));
    if p + q == 0 {
        return Ok(out);
    }
    let s = Scalar::from_int(if (p + 1) * (q + 1) % 2 == 0 { 1 } else { -1 });
    half(alpha, beta, ctx.n(), &mut out, &s);
    half(beta, alpha, ctx.n(), &mut out, &Scalar::from_int(-1));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_fields() {
        let ctx = QContext::classical(2);
        let x = |i| Monomial::var(2, i);
        let a = KoszulCochain::basis(x(1), ExtIndex::single(2));
        let b = KoszulCochain::basis(x(2), ExtIndex::single(1));
        let mut e = KoszulCochain::basis(x(1), ExtIndex::single(1));
        e.add_term(x(2), ExtIndex::single(2), Scalar::from_int(-1));
        assert_eq!(schouten_classical(&ctx, &a, &b).unwrap(), e);
    }

    #[test]
    fn derivation_property() {
        let ctx = QContext::classical(2);
        let d1 = KoszulCochain::basis(Monomial::one(2), ExtIndex::single(1));
        let f = KoszulCochain::basis(Monomial::from_exps(&[2, 1]), ExtIndex::single(2));
        let e = KoszulCochain::term(Scalar::from_int(2), Monomial::from_exps(&[1, 1]), ExtIndex::single(2));
        assert_eq!(schouten_classical(&ctx, &d1, &f).unwrap(), e);
    }

    #[test]
    fn function_against_bivector() {
        let ctx = QContext::classical(2);
        let f = KoszulCochain::basis(Monomial::var(2, 2), ExtIndex::empty());
        let pi = KoszulCochain::basis(Monomial::one(2), ExtIndex::from_indices(&[1, 2]));
        let e = KoszulCochain::term(Scalar::from_int(-1), Monomial::one(2), ExtIndex::single(1));
        assert_eq!(schouten_classical(&ctx, &f, &pi).unwrap(), e);
    }

    #[test]
    fn rejects_quantum() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let z = KoszulCochain::zero(1);
        assert_eq!(schouten_classical(&ctx, &z, &z), Err(Error::NotClassical));
    }
}
