//! Transport between `(A ⋊ G) ⊗ Λ(V*)` cochains and bar cochains of `A ⋊ G`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{monomials_product, ExtIndex, GroupAction, GroupElement, Monomial, QContext, SkewElement};
use crate::brackets::{bracket_bar, BarCochain};
use crate::chainmaps::{phi, psi};
use crate::complexes::KoszulElem;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::cochain::{is_invariant, reynolds, SkewKoszulCochain};

/// `Ψ`, averaged over `G` when the action is not diagonal so that it commutes
/// with the group.
fn psi_equivariant(ctx: &QContext, action: &GroupAction, w: &[Monomial]) -> KoszulElem {
    if action.is_diagonal() {
        return psi(ctx, w);
    }
    let group = action.group();
    let mut out = KoszulElem::zero(ctx.n(), w.len() as i32);
    for c in action.elements() {
        let ci = group.inv(c);
        let mut coeff = Scalar::one();
        let mut moved = Vec::with_capacity(w.len());
        for m in w {
            let (t, m2) = action.act_monomial(ctx, &ci, m);
            coeff = coeff.mul(&t);
            moved.push(m2);
        }
        for ((u, i, v), d) in psi(ctx, &moved).terms() {
            let (t1, u2) = action.act_monomial(ctx, c, u);
            let Some((t2, i2)) = action.act_wedge(ctx, c, *i) else {
                continue;
            };
            let (t3, v2) = action.act_monomial(ctx, c, v);
            out.add_term(u2, i2, v2, coeff.mul(d).mul(&t1).mul(&t2).mul(&t3));
        }
    }
    out.scale(&action.inv_size())
}

/// The bar cochain of `A ⋊ G` attached to a `G`-invariant cochain
/// `Σ a_{I,h} ♯ h ⊗ dx_I`: unwind the group elements to the right, apply `Ψ`
/// and evaluate `u ⊗ x_I ⊗ v ⊗ K` to `Σ_h u a_{I,h} (h.v) ♯ hK`.
pub fn theta(ctx: &QContext, action: &GroupAction, alpha: &SkewKoszulCochain) -> Result<BarCochain<SkewElement>> {
    if !is_invariant(ctx, action, alpha) {
        return Err(Error::NotInvariant);
    }
    let mut by_wedge: BTreeMap<ExtIndex, Vec<(Monomial, GroupElement, Scalar)>> = BTreeMap::new();
    for ((a, h, i), c) in alpha.terms() {
        by_wedge.entry(*i).or_default().push((a.clone(), h.clone(), c.clone()));
    }
    let ctx = Arc::new(ctx.clone());
    let action = Arc::new(action.clone());
    Ok(BarCochain::new(alpha.degree(), move |w: &[(Monomial, GroupElement)]| {
        let group = action.group();
        let mut k = group.identity();
        let mut coeff = Scalar::one();
        let mut word = Vec::with_capacity(w.len());
        for (m, g) in w {
            let (t, m2) = action.act_monomial(&ctx, &k, m);
            coeff = coeff.mul(&t);
            word.push(m2);
            k = group.mul(&k, g);
        }
        let mut out = SkewElement::zero();
        if coeff.is_zero() {
            return out;
        }
        for ((u, i, v), d) in psi_equivariant(&ctx, &action, &word).terms() {
            let Some(parts) = by_wedge.get(i) else {
                continue;
            };
            for (a, h, e) in parts {
                let (t, hv) = action.act_monomial(&ctx, h, v);
                let (t2, m) = monomials_product(&ctx, &[u, a, &hv]);
                out.add_term(m, group.mul(h, &k), coeff.mul(d).mul(e).mul(&t).mul(&t2));
            }
        }
        out
    }))
}

/// `F ∘ Φ` read back as `Σ_I F(Φ(x_I)) ⊗ dx_I`, projected to invariants when
/// the action is not diagonal.
pub fn gamma(ctx: &QContext, action: &GroupAction, f: &BarCochain<SkewElement>) -> SkewKoszulCochain {
    let n = ctx.n();
    let p = f.degree();
    let e = action.group().identity();
    let mut out = SkewKoszulCochain::zero(p);
    for i in ExtIndex::all_of_len(n, p) {
        for ((_, w, _), c) in phi(ctx, i).terms() {
            let word: Vec<_> = w.iter().map(|m| (m.clone(), e.clone())).collect();
            for ((m, g), d) in f.eval(&word).terms() {
                out.add_term(m.clone(), g.clone(), i, c.mul(d));
            }
        }
    }
    if action.is_diagonal() {
        out
    } else {
        reynolds(ctx, action, &out)
    }
}

/// `[α, β] = Γ([Θ α, Θ β])` for invariant cochains.
pub fn bracket_skew_pipeline(
    ctx: &QContext,
    action: &GroupAction,
    alpha: &SkewKoszulCochain,
    beta: &SkewKoszulCochain,
) -> Result<SkewKoszulCochain> {
    let f = theta(ctx, action, alpha)?;
    let g = theta(ctx, action, beta)?;
    if alpha.degree() + beta.degree() == 0 {
        return Ok(SkewKoszulCochain::zero(0));
    }
    Ok(gamma(ctx, action, &bracket_bar(&f, &g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ActionSpec, GroupSpec};
    use crate::brackets::{bracket_closed, KoszulCochain};
    use crate::group_ext::hh_skew_basis;

    fn lift(action: &GroupAction, x: &KoszulCochain) -> SkewKoszulCochain {
        let e = action.group().identity();
        let mut out = SkewKoszulCochain::zero(x.degree());
        for ((a, i), c) in x.terms() {
            out.add_term(a.clone(), e.clone(), *i, c.clone());
        }
        out
    }

    #[test]
    fn trivial_group_matches_plain_bracket() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let act = GroupAction::trivial(2);
        let a = KoszulCochain::basis(Monomial::from_exps(&[1, 0]), ExtIndex::single(1));
        let b = KoszulCochain::basis(Monomial::from_exps(&[1, 1]), ExtIndex::from_indices(&[1, 2]));
        let got = bracket_skew_pipeline(&ctx, &act, &lift(&act, &a), &lift(&act, &b)).unwrap();
        assert_eq!(got, lift(&act, &bracket_closed(&ctx, &a, &b)));
    }

    #[test]
    fn theta_rejects_non_invariant() {
        let ctx = QContext::symbolic(1, 2).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![2]).unwrap(), &ActionSpec::Diagonal(vec![vec![1]])).unwrap();
        let x = SkewKoszulCochain::basis(Monomial::var(1, 1), act.group().identity(), ExtIndex::empty());
        assert!(matches!(theta(&ctx, &act, &x), Err(Error::NotInvariant)));
    }

    #[test]
    fn gamma_theta_identity_on_invariants() {
        let ctx = QContext::symbolic(2, 2).unwrap();
        let act = GroupAction::new(
            &ctx,
            GroupSpec::new(vec![2]).unwrap(),
            &ActionSpec::Diagonal(vec![vec![1], vec![1]]),
        )
        .unwrap();
        for m in 0..=2 {
            for x in hh_skew_basis(&ctx, &act, m, 2).unwrap() {
                let r = reynolds(&ctx, &act, &x);
                if r.is_zero() {
                    continue;
                }
                let back = gamma(&ctx, &act, &theta(&ctx, &act, &r).unwrap());
                assert_eq!(back, r, "{x}");
            }
        }
    }
}
