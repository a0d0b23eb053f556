//! The closed-form bracket on basis cocycles `x^a ⊗ dx_J`, `x^b ⊗ dx_L`.

use crate::algebra::{ext_reorder, monomials_product, ExtIndex, Monomial, QContext, Twister};
use crate::scalar::Scalar;

use super::cochain::KoszulCochain;

/// One term `coeff * u ⊗ v` of the insertion of `x^b ⊗ dx_L` into slot `s` of
/// a cochain with wedge `J`; the value is `coeff * u x^a v ⊗ dx_I`.
#[derive(Clone, Debug)]
pub struct InsertionTerm {
    pub coeff: Scalar,
    pub u: Monomial,
    pub v: Monomial,
    pub wedge: ExtIndex,
}

/// The terms of `((x^a ⊗ dx_J) Ψ ∘_s (x^b ⊗ dx_L) Ψ) Φ`, without the outer
/// monomial: `sgn(π_s) q_π^I μ` times the split of `∂_[j_s](x^b)`, with
/// `dx_{I_s} = sgn(π_s) q_π dx_{J_s ⊔ L}` and `μ` making
/// `x_{j_1} ... x^b ... x_{j_p} = μ u x_{j_1} ... x_{j_p} v`.
pub fn insertion_terms(ctx: &QContext, outer: ExtIndex, s: usize, b: &Monomial, inner: ExtIndex) -> Vec<InsertionTerm> {
    let n = ctx.n();
    let js = outer.indices();
    let js_ = js[s - 1];
    let bj = b.exp(js_);
    let rest = outer.without(js_);
    if bj == 0 || rest.intersects(inner) {
        return Vec::new();
    }
    let mut word: Vec<usize> = js[..s - 1].to_vec();
    word.extend(inner.indices());
    word.extend_from_slice(&js[s..]);
    let Some((f1, wedge)) = ext_reorder(ctx, &word) else {
        return Vec::new();
    };
    let mut old = Twister::new(n);
    old.push_letters(js[..s - 1].iter().copied());
    old.push_monomial(b);
    old.push_letters(js[s..].iter().copied());
    (1..=bj)
        .map(|r| {
            let u = b.restrict(js_ + 1, n).with_exp(js_, bj - r);
            let v = b.restrict(1, js_ - 1).with_exp(js_, r - 1);
            let mut new = Twister::new(n);
            new.push_monomial(&u);
            new.push_letters(js.iter().copied());
            new.push_monomial(&v);
            let mu = ctx.twist(&old.ratio_exps(&new));
            InsertionTerm {
                coeff: f1.mul(&mu),
                u,
                v,
                wedge,
            }
        })
        .collect()
}

fn sign(e: usize) -> Scalar {
    Scalar::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// `[α, β]` for basis cocycles by the closed formula.
pub fn bracket_closed_basis(ctx: &QContext, a: &Monomial, j: ExtIndex, b: &Monomial, l: ExtIndex) -> KoszulCochain {
    let (p, q) = (j.len(), l.len());
    let mut out = KoszulCochain::zero((p + q).saturating_sub(1));
    if p + q == 0 {
        return out;
    }
    for s in 1..=p {
        let sg = sign((q + 1) * (s + 1));
        for t in insertion_terms(ctx, j, s, b, l) {
            let (c, m) = monomials_product(ctx, &[&t.u, a, &t.v]);
            out.add_term(m, t.wedge, t.coeff.mul(&c).mul(&sg));
        }
    }
    let outer = sign((p + 1) * (q + 1)).neg();
    for k in 1..=q {
        let sg = outer.mul(&sign((p + 1) * (k + 1)));
        for t in insertion_terms(ctx, l, k, a, j) {
            let (c, m) = monomials_product(ctx, &[&t.u, b, &t.v]);
            out.add_term(m, t.wedge, t.coeff.mul(&c).mul(&sg));
        }
    }
    out
}

/// The closed-form bracket, extended bilinearly over the terms of `α`, `β`.
pub fn bracket_closed(ctx: &QContext, alpha: &KoszulCochain, beta: &KoszulCochain) -> KoszulCochain {
    let deg = (alpha.degree() + beta.degree()).saturating_sub(1);
    let mut out = KoszulCochain::zero(deg);
    for ((a, j), c) in alpha.terms() {
        for ((b, l), d) in beta.terms() {
            out.add_scaled(&bracket_closed_basis(ctx, a, *j, b, *l), &c.mul(d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{bracket_pipeline, hh_basis};

    #[test]
    fn closed_equals_pipeline_small() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let basis: Vec<KoszulCochain> = (0..=2).flat_map(|m| hh_basis(&ctx, m, 3)).collect();
        for x in &basis {
            for y in &basis {
                if x.degree() + y.degree() > 3 || x.degree() + y.degree() == 0 {
                    continue;
                }
                let c = bracket_closed(&ctx, x, y);
                let p = bracket_pipeline(&ctx, x, y);
                assert_eq!(c, p, "[{x}, {y}]");
            }
        }
    }
}
