use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{add_q, monomial_product, ExtIndex, GroupAction, GroupElement, Monomial, QContext};
use crate::brackets::gamma_of;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A cochain `Σ c x^a ♯ g ⊗ dx_b` in `(A ⋊ G) ⊗ Λ_{q^-1}(V*)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewKoszulCochain {
    degree: usize,
    terms: BTreeMap<(Monomial, GroupElement, ExtIndex), Scalar>,
}

impl SkewKoszulCochain {
    pub fn zero(degree: usize) -> Self {
        SkewKoszulCochain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(c: Scalar, a: Monomial, g: GroupElement, b: ExtIndex) -> Self {
        let mut x = SkewKoszulCochain::zero(b.len());
        x.add_term(a, g, b, c);
        x
    }

    pub fn basis(a: Monomial, g: GroupElement, b: ExtIndex) -> Self {
        SkewKoszulCochain::term(Scalar::one(), a, g, b)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, a: Monomial, g: GroupElement, b: ExtIndex, c: Scalar) {
        debug_assert_eq!(b.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, g, b)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, GroupElement, ExtIndex), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &SkewKoszulCochain, c: &Scalar) {
        for ((a, g, b), d) in &other.terms {
            self.add_term(a.clone(), g.clone(), *b, d.mul(c));
        }
    }

    pub fn add(&self, other: &SkewKoszulCochain) -> SkewKoszulCochain {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &SkewKoszulCochain) -> SkewKoszulCochain {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> SkewKoszulCochain {
        let mut out = SkewKoszulCochain::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> SkewKoszulCochain {
        let mut out = SkewKoszulCochain::zero(self.degree);
        for ((a, g, b), c) in &self.terms {
            out.add_term(a.clone(), g.clone(), *b, f(c));
        }
        out
    }
}

impl fmt::Display for SkewKoszulCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, g, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{a} # {g} ^ {}", b.dx_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewKoszulCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The differential
/// `d(x^l ♯ g ⊗ dx_I) = Σ_{i ∉ I} ± ((Π_{i_s<i} q_{i_s,i}) x_i x^l - (Π_{i_s>i} q_{i,i_s}) x^l (g.x_i)) ♯ g ⊗ dx_{I+e_i}`.
pub fn skew_diff(ctx: &QContext, action: &GroupAction, x: &SkewKoszulCochain) -> SkewKoszulCochain {
    let n = ctx.n();
    let mut out = SkewKoszulCochain::zero(x.degree() + 1);
    for ((l, g, idx), c) in x.terms() {
        for i in 1..=n {
            if idx.contains(i) {
                continue;
            }
            let sign = if idx.count_below(i) % 2 == 0 { c.clone() } else { c.neg() };
            let mut left = vec![0i32; ctx.slot_count()];
            let mut right = vec![0i32; ctx.slot_count()];
            for s in idx.indices() {
                if s < i {
                    add_q(&mut left, s, i, 1);
                } else {
                    add_q(&mut right, i, s, 1);
                }
            }
            let target = idx.with(i);
            let (t1, m1) = monomial_product(ctx, &Monomial::var(n, i), l);
            out.add_term(m1, g.clone(), target, sign.mul(&ctx.twist(&left)).mul(&t1));
            let (gc, gi) = action.image(g, i);
            let (t2, m2) = monomial_product(ctx, l, &Monomial::var(n, *gi));
            let coeff = sign.mul(&ctx.twist(&right)).mul(&t2).scale_cyc(gc);
            out.add_term(m2, g.clone(), target, coeff.neg());
        }
    }
    out
}

/// Whether `γ ∈ C_g`: for each `i`, `γ_i = -1` or `Π_s q_is^{γ_s} = χ_i(g)`.
pub fn cg_membership(ctx: &QContext, action: &GroupAction, gamma: &[i64], g: &GroupElement) -> Result<bool> {
    if !action.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let n = ctx.n();
    Ok((1..=n).all(|i| {
        if gamma[i - 1] == -1 {
            return true;
        }
        let mut e = vec![0i32; ctx.slot_count()];
        for s in 1..=n {
            add_q(&mut e, i, s, gamma[s - 1] as i32);
        }
        let chi = action.chi(g, i);
        if ctx.is_symbolic() {
            e.iter().all(|&x| x == 0) && chi.is_one()
        } else {
            ctx.twist(&e) == Scalar::from_cyc(chi)
        }
    }))
}

/// All `x^a ♯ g ⊗ dx_b` with `|b| = m`, `a - b ∈ C_g`, `|a| <= cap`.
pub fn hh_skew_basis(ctx: &QContext, action: &GroupAction, m: usize, degree_cap: u32) -> Result<Vec<SkewKoszulCochain>> {
    let n = ctx.n();
    let mut out = Vec::new();
    for g in action.elements() {
        for b in ExtIndex::all_of_len(n, m) {
            for a in Monomial::up_to_degree(n, 0, degree_cap) {
                if cg_membership(ctx, action, &gamma_of(&a, b), g)? {
                    out.push(SkewKoszulCochain::basis(a, g.clone(), b));
                }
            }
        }
    }
    Ok(out)
}

/// `h . (x^l ♯ g ⊗ dx_I) = (h.x^l) ♯ hgh^-1 ⊗ h.dx_I`.
pub fn act_cochain(ctx: &QContext, action: &GroupAction, h: &GroupElement, x: &SkewKoszulCochain) -> SkewKoszulCochain {
    let mut out = SkewKoszulCochain::zero(x.degree());
    for ((l, g, idx), c) in x.terms() {
        let (c1, l2) = action.act_monomial(ctx, h, l);
        let (c2, idx2) = action.act_dual_wedge(ctx, h, *idx).expect("distinct images");
        out.add_term(l2, g.clone(), idx2, c.mul(&c1).mul(&c2));
    }
    out
}

/// The Reynolds operator `(1/|G|) Σ_h h.α`.
pub fn reynolds(ctx: &QContext, action: &GroupAction, x: &SkewKoszulCochain) -> SkewKoszulCochain {
    let mut out = SkewKoszulCochain::zero(x.degree());
    for h in action.elements() {
        out.add_scaled(&act_cochain(ctx, action, h, x), &Scalar::one());
    }
    out.scale(&action.inv_size())
}

pub fn is_invariant(ctx: &QContext, action: &GroupAction, x: &SkewKoszulCochain) -> bool {
    action.elements().iter().all(|h| act_cochain(ctx, action, h, x) == *x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ActionSpec, GroupSpec};
    use crate::scalar::Cyc;

    fn z2_on_line() -> (QContext, GroupAction) {
        let ctx = QContext::specialized(1, 2, &[]).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![2]).unwrap(), &ActionSpec::Diagonal(vec![vec![1]])).unwrap();
        (ctx, act)
    }

    #[test]
    fn diff_on_line() {
        let ctx = QContext::symbolic(1, 3).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![3]).unwrap(), &ActionSpec::Diagonal(vec![vec![1]])).unwrap();
        let g = act.group().generator(0);
        let x = SkewKoszulCochain::basis(Monomial::one(1), g.clone(), ExtIndex::empty());
        let d = skew_diff(&ctx, &act, &x);
        let c = Scalar::one().sub(&Scalar::from_cyc(Cyc::zeta_pow(3, 1)));
        assert_eq!(d, SkewKoszulCochain::term(c, Monomial::var(1, 1), g, ExtIndex::single(1)));
        assert!(skew_diff(&ctx, &act, &d).is_zero());
    }

    #[test]
    fn cg_on_line() {
        let (ctx, act) = z2_on_line();
        let g = act.group().generator(0);
        assert!(cg_membership(&ctx, &act, &[-1], &g).unwrap());
        assert!(!cg_membership(&ctx, &act, &[0], &g).unwrap());
        assert!(cg_membership(&ctx, &act, &[0], &act.group().identity()).unwrap());
    }

    #[test]
    fn reynolds_idempotent() {
        let ctx = QContext::symbolic(2, 2).unwrap();
        let act = GroupAction::new(
            &ctx,
            GroupSpec::new(vec![2]).unwrap(),
            &ActionSpec::Diagonal(vec![vec![1], vec![0]]),
        )
        .unwrap();
        let g = act.group().generator(0);
        let x = SkewKoszulCochain::basis(Monomial::from_exps(&[1, 1]), g, ExtIndex::single(1));
        let r = reynolds(&ctx, &act, &x);
        assert_eq!(r, x);
        let y = SkewKoszulCochain::basis(Monomial::from_exps(&[1, 1]), act.group().identity(), ExtIndex::single(2));
        assert!(reynolds(&ctx, &act, &y).is_zero());
    }
}
