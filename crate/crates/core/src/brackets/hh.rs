//! Hochschild cohomology of `S_q(V)` on the Koszul side and its transport to
//! bar cochains through `Ψ` and `Φ`.

use std::sync::Arc;

use crate::algebra::{add_q, monomials_product, AlgebraElement, ExtIndex, Monomial, QContext};
use crate::chainmaps::{phi, psi};

use super::cochain::{bracket_bar, BarCochain, KoszulCochain};

/// Whether `γ ∈ C`: for each `i`, `γ_i = -1` or `Π_s q_is^{γ_s} = 1`.
pub fn c_membership(ctx: &QContext, gamma: &[i64]) -> bool {
    let n = ctx.n();
    assert_eq!(gamma.len(), n);
    (1..=n).all(|i| {
        if gamma[i - 1] == -1 {
            return true;
        }
        let mut e = vec![0i32; ctx.slot_count()];
        for s in 1..=n {
            add_q(&mut e, i, s, gamma[s - 1] as i32);
        }
        ctx.twist_is_one(&e)
    })
}

/// `γ = a - b` with `b` read as a 0/1 vector.
pub fn gamma_of(a: &Monomial, b: ExtIndex) -> Vec<i64> {
    (1..=a.n()).map(|i| a.exp(i) as i64 - b.contains(i) as i64).collect()
}

/// The basis `x^a ⊗ dx_b` of `HH^m` with `|b| = m`, `a - b ∈ C`, `|a| <= cap`.
pub fn hh_basis(ctx: &QContext, m: usize, degree_cap: u32) -> Vec<KoszulCochain> {
    let n = ctx.n();
    let mut out = Vec::new();
    for b in ExtIndex::all_of_len(n, m) {
        for a in Monomial::up_to_degree(n, 0, degree_cap) {
            if c_membership(ctx, &gamma_of(&a, b)) {
                out.push(KoszulCochain::basis(a, b));
            }
        }
    }
    out
}

/// `α ∘ Ψ`: the bar cochain sending `1 ⊗ w ⊗ 1` to `α(Ψ(1 ⊗ w ⊗ 1))`, where
/// `x^a ⊗ dx_I` evaluates `u ⊗ x_I ⊗ v` to `u x^a v`.
pub fn from_koszul(ctx: &QContext, alpha: &KoszulCochain) -> BarCochain<AlgebraElement> {
    let ctx = Arc::new(ctx.clone());
    let alpha = Arc::new(alpha.clone());
    BarCochain::new(alpha.degree(), move |w: &[Monomial]| {
        let image = psi(&ctx, w);
        let mut out = AlgebraElement::zero();
        for ((u, i, v), c) in image.terms() {
            for ((a, b), d) in alpha.terms() {
                if b == i {
                    let (t, m) = monomials_product(&ctx, &[u, a, v]);
                    out.add_term(m, c.mul(d).mul(&t));
                }
            }
        }
        out
    })
}

/// `f ∘ Φ` read back as `Σ_I f(Φ(1 ⊗ x_I ⊗ 1)) ⊗ dx_I`.
pub fn to_koszul(ctx: &QContext, f: &BarCochain<AlgebraElement>) -> KoszulCochain {
    let n = ctx.n();
    let p = f.degree();
    let mut out = KoszulCochain::zero(p);
    for i in ExtIndex::all_of_len(n, p) {
        for ((_, w, _), c) in phi(ctx, i).terms() {
            for (m, d) in f.eval(w).terms() {
                out.add_term(m.clone(), i, c.mul(d));
            }
        }
    }
    out
}

/// `[α, β] = [α Ψ, β Ψ] Φ`.
pub fn bracket_pipeline(ctx: &QContext, alpha: &KoszulCochain, beta: &KoszulCochain) -> KoszulCochain {
    if alpha.degree() + beta.degree() == 0 {
        return KoszulCochain::zero(0);
    }
    let f = from_koszul(ctx, alpha);
    let g = from_koszul(ctx, beta);
    to_koszul(ctx, &bracket_bar(&f, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Cyc, Scalar};

    #[test]
    fn membership_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        assert!(c_membership(&ctx, &[0, 0]));
        assert!(c_membership(&ctx, &[-1, -1]));
        assert!(!c_membership(&ctx, &[1, -1]));
        let z3 = QContext::specialized(2, 3, &[((1, 2), Cyc::zeta_pow(3, 1))]).unwrap();
        assert!(c_membership(&z3, &[3, 0]));
        assert!(c_membership(&z3, &[3, 3]));
        assert!(!c_membership(&z3, &[1, 0]));
    }

    #[test]
    fn dimensions_generic_plane() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let dims: Vec<usize> = (0..=2).map(|m| hh_basis(&ctx, m, 6).len()).collect();
        assert_eq!(dims, vec![1, 2, 2]);
    }

    #[test]
    fn round_trip_through_bar() {
        let ctx = QContext::symbolic(3, 1).unwrap();
        for m in 0..=3 {
            for alpha in hh_basis(&ctx, m, 2) {
                assert_eq!(to_koszul(&ctx, &from_koszul(&ctx, &alpha)), alpha);
            }
        }
    }

    #[test]
    fn pipeline_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let x = |i| Monomial::var(2, i);
        let a = KoszulCochain::basis(x(1), ExtIndex::single(1));
        let b = KoszulCochain::basis(x(2), ExtIndex::single(2));
        assert!(bracket_pipeline(&ctx, &a, &b).is_zero());

        let cl = QContext::classical(2);
        let a = KoszulCochain::basis(x(1), ExtIndex::single(2));
        let b = KoszulCochain::basis(x(2), ExtIndex::single(1));
        let mut e = KoszulCochain::basis(x(1), ExtIndex::single(1));
        e.add_term(x(2), ExtIndex::single(2), Scalar::from_int(-1));
        assert_eq!(bracket_pipeline(&cl, &a, &b), e);
    }
}
