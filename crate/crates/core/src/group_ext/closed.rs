//! The closed-form bracket on Reynolds images of basis cocycles
//! `x^a ♯ g ⊗ dx_J`, `x^b ♯ h ⊗ dx_L`, for diagonal actions.

use crate::algebra::{monomials_product, ExtIndex, GroupAction, GroupElement, Monomial, QContext};
use crate::brackets::insertion_terms;
use crate::error::{Error, Result};
use crate::scalar::{Cyc, Scalar};

use super::cochain::SkewKoszulCochain;

fn sign(e: usize) -> Scalar {
    Scalar::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// The scalar `S` with `R(x^a ♯ g ⊗ dx_J) = S x^a ♯ g ⊗ dx_J`.
fn averaging_factor(action: &GroupAction, a: &Monomial, j: ExtIndex) -> Scalar {
    let group = action.group();
    let mut acc = Cyc::zero();
    for k in action.elements() {
        let kj = action.chi_index(&group.inv(k), j);
        acc = acc.add(&kj.mul(&action.chi_monomial(k, a)));
    }
    Scalar::from_cyc(acc).mul(&action.inv_size())
}

fn index_above(j: ExtIndex, s: usize) -> ExtIndex {
    ExtIndex::from_indices(&j.indices()[s..])
}

/// `[R(x^a ♯ g ⊗ dx_J), R(x^b ♯ h ⊗ dx_L)]` by the closed formula.
#[allow(clippy::too_many_arguments)]
pub fn bracket_skew_closed_basis(
    ctx: &QContext,
    action: &GroupAction,
    a: &Monomial,
    g: &GroupElement,
    j: ExtIndex,
    b: &Monomial,
    h: &GroupElement,
    l: ExtIndex,
) -> Result<SkewKoszulCochain> {
    if !action.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let (p, q) = (j.len(), l.len());
    let mut out = SkewKoszulCochain::zero((p + q).saturating_sub(1));
    if p + q == 0 {
        return Ok(out);
    }
    let s_ab = averaging_factor(action, a, j).mul(&averaging_factor(action, b, l));
    if s_ab.is_zero() {
        return Ok(out);
    }
    let group = action.group();
    let gh = group.mul(g, h);
    for s in 1..=p {
        let sg = sign((q + 1) * (s + 1)).mul(&s_ab).scale_cyc(&action.chi_index(h, index_above(j, s)));
        for t in insertion_terms(ctx, j, s, b, l) {
            let (c, m) = monomials_product(ctx, &[&t.u, a, &t.v]);
            let c = c.mul(&t.coeff).mul(&sg).scale_cyc(&action.chi_monomial(g, &t.v));
            out.add_term(m, gh.clone(), t.wedge, c);
        }
    }
    let outer = sign((p + 1) * (q + 1)).neg().mul(&s_ab);
    for k in 1..=q {
        let sg = outer.mul(&sign((p + 1) * (k + 1))).scale_cyc(&action.chi_index(g, index_above(l, k)));
        for t in insertion_terms(ctx, l, k, a, j) {
            let (c, m) = monomials_product(ctx, &[&t.u, b, &t.v]);
            let c = c.mul(&t.coeff).mul(&sg).scale_cyc(&action.chi_monomial(h, &t.v));
            out.add_term(m, gh.clone(), t.wedge, c);
        }
    }
    Ok(out)
}

/// The closed-form bracket of Reynolds images, extended bilinearly.
pub fn bracket_skew_closed(
    ctx: &QContext,
    action: &GroupAction,
    alpha: &SkewKoszulCochain,
    beta: &SkewKoszulCochain,
) -> Result<SkewKoszulCochain> {
    let mut out = SkewKoszulCochain::zero((alpha.degree() + beta.degree()).saturating_sub(1));
    for ((a, g, j), c) in alpha.terms() {
        for ((b, h, l), d) in beta.terms() {
            let t = bracket_skew_closed_basis(ctx, action, a, g, *j, b, h, *l)?;
            out.add_scaled(&t, &c.mul(d));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ActionSpec, GroupSpec};
    use crate::group_ext::{bracket_skew_pipeline, hh_skew_basis, reynolds};

    fn check(ctx: &QContext, act: &GroupAction, cap: u32, max_sum: usize) {
        let bases: Vec<Vec<SkewKoszulCochain>> = (0..=max_sum).map(|m| hh_skew_basis(ctx, act, m, cap).unwrap()).collect();
        let mut checked = 0;
        for p in 0..=max_sum {
            for q in 0..=(max_sum - p) {
                for x in &bases[p] {
                    for y in &bases[q] {
                        let (rx, ry) = (reynolds(ctx, act, x), reynolds(ctx, act, y));
                        let closed = bracket_skew_closed(ctx, act, x, y).unwrap();
                        if rx.is_zero() || ry.is_zero() {
                            assert!(closed.is_zero());
                            continue;
                        }
                        let pipe = bracket_skew_pipeline(ctx, act, &rx, &ry).unwrap();
                        assert_eq!(closed, pipe, "[{x}, {y}]");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn closed_matches_pipeline_z2() {
        let ctx = QContext::symbolic(2, 2).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![2]).unwrap(), &ActionSpec::Diagonal(vec![vec![1], vec![1]])).unwrap();
        check(&ctx, &act, 2, 3);
    }

    #[test]
    fn closed_matches_pipeline_z3() {
        let ctx = QContext::symbolic(2, 3).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![3]).unwrap(), &ActionSpec::Diagonal(vec![vec![1], vec![2]])).unwrap();
        check(&ctx, &act, 3, 2);
    }
}
