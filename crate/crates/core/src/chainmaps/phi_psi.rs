//! Closed forms of the comparison morphisms `Φ: K → B` and `Ψ: B → K`.

use itertools::Itertools;

use crate::algebra::{q_pi_word, sort_sign, ExtIndex, Monomial, QContext, Twister};
use crate::complexes::{recast_algebra, BarElem, Chain, ChainBasis, KoszulElem, Word};
use crate::scalar::Scalar;

/// `Φ_p(1 ⊗ x_J ⊗ 1) = Σ_π sgn(π) q_π ⊗ x_{j_π(1)} ⊗ ... ⊗ x_{j_π(p)} ⊗ 1`.
pub fn phi(ctx: &QContext, j: ExtIndex) -> BarElem {
    let n = ctx.n();
    let js = j.indices();
    let p = js.len();
    let mut out = Chain::zero(n, p as i32);
    for perm in (0..p).permutations(p) {
        let word: Vec<usize> = perm.iter().map(|&k| js[k]).collect();
        let c = q_pi_word(ctx, &word).scale_cyc(&crate::scalar::Cyc::from_int(sort_sign(&word)));
        let w: Word = word.iter().map(|&i| Monomial::var(n, i)).collect();
        out.add_term(Monomial::one(n), w, Monomial::one(n), c);
    }
    out
}

/// The `Ψ_p` image of `1 ⊗ w ⊗ 1`.
pub fn psi(ctx: &QContext, w: &[Monomial]) -> KoszulElem {
    let n = ctx.n();
    let p = w.len();
    if p == 0 {
        return Chain::basis(n, 0, ExtIndex::empty());
    }
    let mut out = Chain::zero(n, p as i32);
    let mut old = Twister::new(n);
    for m in w {
        old.push_monomial(m);
    }
    let total = old.monomial();
    let mut js = Vec::with_capacity(p);
    psi_rec(ctx, w, 0, &mut js, &old, &total, &mut out);
    out
}

/// Chooses `j_s > j_{s-1}` with `x_{j_s}` dividing `w[s]`, then all `r`.
fn psi_rec(
    ctx: &QContext,
    w: &[Monomial],
    s: usize,
    js: &mut Vec<usize>,
    old: &Twister,
    total: &Monomial,
    out: &mut KoszulElem,
) {
    let n = ctx.n();
    if s == w.len() {
        let jset = ExtIndex::from_indices(js);
        psi_terms(ctx, w, js, old, total, jset, out);
        return;
    }
    let lo = js.last().map_or(1, |&j| j + 1);
    for j in lo..=n {
        if w[s].exp(j) > 0 {
            js.push(j);
            psi_rec(ctx, w, s + 1, js, old, total, out);
            js.pop();
        }
    }
}

fn psi_terms(
    ctx: &QContext,
    w: &[Monomial],
    js: &[usize],
    old: &Twister,
    total: &Monomial,
    jset: ExtIndex,
    out: &mut KoszulElem,
) {
    let n = ctx.n();
    let p = js.len();
    // Base exponents of Q with every r_s = 0.
    let mut base = vec![0u32; n];
    for s in 0..p {
        let hi = if s + 1 < p { js[s + 1] } else { n + 1 };
        base[js[s] - 1] = w[..s].iter().map(|m| m.exp(js[s])).sum();
        for j in js[s] + 1..hi {
            base[j - 1] = w[..=s].iter().map(|m| m.exp(j)).sum();
        }
    }
    let ranges: Vec<std::ops::Range<u32>> = (0..p).map(|s| 0..w[s].exp(js[s])).collect();
    for rs in ranges.into_iter().multi_cartesian_product() {
        let mut q = base.clone();
        for (s, r) in rs.iter().enumerate() {
            q[js[s] - 1] += r;
        }
        let qm = Monomial::from_exps(&q);
        let mut qhat = total.div(&qm).expect("Q divides the total monomial");
        for &j in js {
            qhat = qhat.div(&Monomial::var(n, j)).expect("complement is nonnegative");
        }
        let mut new = Twister::new(n);
        new.push_monomial(&qm);
        new.push_letters(js.iter().copied());
        new.push_monomial(&qhat);
        out.add_term(qm, jset, qhat, ctx.twist(&old.ratio_exps(&new)));
    }
}

/// Extends a basis map bimodule-linearly over a chain; degree `-1` is the identity.
pub fn extend<B: ChainBasis, C: ChainBasis>(
    ctx: &QContext,
    x: &Chain<B>,
    mut f: impl FnMut(&B) -> Chain<C>,
) -> Chain<C> {
    if x.degree() == -1 {
        return recast_algebra(x);
    }
    let mut out = Chain::zero(ctx.n(), x.degree());
    for ((u, b, v), c) in x.terms() {
        out.add_scaled(&f(b).bimodule(ctx, c, u, v), &Scalar::one());
    }
    out
}

/// `Φ` on an arbitrary Koszul chain.
pub fn phi_chain(ctx: &QContext, x: &KoszulElem) -> BarElem {
    extend(ctx, x, |j| phi(ctx, *j))
}

/// `Ψ` on an arbitrary bar chain.
pub fn psi_chain(ctx: &QContext, x: &BarElem) -> KoszulElem {
    extend(ctx, x, |w| psi(ctx, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_two() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let f = phi(&ctx, ExtIndex::from_indices(&[1, 2]));
        let one = Monomial::one(2);
        let x = |i| Monomial::var(2, i);
        let mut e = Chain::zero(2, 2);
        e.add_term(one.clone(), vec![x(1), x(2)], one.clone(), Scalar::one());
        e.add_term(one.clone(), vec![x(2), x(1)], one.clone(), ctx.q(1, 2).neg());
        assert_eq!(f, e);
    }

    #[test]
    fn psi_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let one = Monomial::one(2);
        let x = |i| Monomial::var(2, i);
        let got = psi(&ctx, &[Monomial::from_exps(&[1, 1])]);
        let mut e = Chain::zero(2, 1);
        e.add_term(x(2), ExtIndex::single(1), one.clone(), ctx.q(1, 2));
        e.add_term(one.clone(), ExtIndex::single(2), x(1), ctx.q(1, 2));
        assert_eq!(got, e);

        let cl = QContext::classical(2);
        let got = psi(&cl, &[Monomial::from_exps(&[2, 1])]);
        let mut e = Chain::zero(2, 1);
        e.add_term(Monomial::from_exps(&[1, 1]), ExtIndex::single(1), one.clone(), Scalar::one());
        e.add_term(x(2), ExtIndex::single(1), x(1), Scalar::one());
        e.add_term(one.clone(), ExtIndex::single(2), Monomial::var_pow(2, 1, 2), Scalar::one());
        assert_eq!(got, e);
    }

    #[test]
    fn psi_phi_identity() {
        let ctx = QContext::symbolic(3, 1).unwrap();
        for p in 0..=3 {
            for j in ExtIndex::all_of_len(3, p) {
                assert_eq!(psi_chain(&ctx, &phi(&ctx, j)), Chain::basis(3, p as i32, j));
            }
        }
    }
}
