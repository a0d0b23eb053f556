//! The normalized bar resolution `B_p = A ⊗ Ā^{⊗p} ⊗ A` and its contraction.

use crate::algebra::{monomial_product, Monomial, QContext};
use crate::scalar::Scalar;

use super::chain::{Chain, Resolution, Word};

pub type BarElem = Chain<Word>;

#[derive(Clone, Copy, Debug)]
pub struct Bar<'a> {
    ctx: &'a QContext,
}

impl<'a> Bar<'a> {
    pub fn new(ctx: &'a QContext) -> Self {
        Bar { ctx }
    }

    /// `1 ⊗ w ⊗ v`.
    pub fn element(&self, w: Word, right: Monomial) -> BarElem {
        let n = self.ctx.n();
        debug_assert!(w.iter().all(|m| !m.is_one()));
        Chain::term(n, w.len() as i32, Scalar::one(), Monomial::one(n), w, right)
    }
}

impl Resolution for Bar<'_> {
    type Basis = Word;

    fn ctx(&self) -> &QContext {
        self.ctx
    }

    fn d_basis(&self, p: i32, w: &Word) -> BarElem {
        let ctx = self.ctx;
        let n = ctx.n();
        let one = Monomial::one(n);
        let mut out = Chain::zero(n, p - 1);
        let p = p as usize;
        out.add_term(w[0].clone(), w[1..].to_vec(), one.clone(), Scalar::one());
        for i in 1..p {
            let (c, m) = monomial_product(ctx, &w[i - 1], &w[i]);
            let mut w2 = Vec::with_capacity(p - 1);
            w2.extend_from_slice(&w[..i - 1]);
            w2.push(m);
            w2.extend_from_slice(&w[i + 1..]);
            let c = if i % 2 == 0 { c } else { c.neg() };
            out.add_term(one.clone(), w2, one.clone(), c);
        }
        let last = if p.is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
        out.add_term(one.clone(), w[..p - 1].to_vec(), w[p - 1].clone(), last);
        out
    }

    fn contract_basis(&self, p: i32, w: &Word, v: &Monomial) -> BarElem {
        let n = self.ctx.n();
        let mut out = Chain::zero(n, p + 1);
        if v.is_one() {
            return out;
        }
        let mut w2 = w.clone();
        w2.push(v.clone());
        let s = if p % 2 == 0 { Scalar::from_int(-1) } else { Scalar::one() };
        out.add_term(Monomial::one(n), w2, Monomial::one(n), s);
        out
    }
}

/// `δ` on the normalized bar resolution.
pub fn bar_delta(ctx: &QContext, x: &BarElem) -> BarElem {
    Bar::new(ctx).d(x)
}

/// The contraction `s` on the normalized bar resolution.
pub fn bar_s(ctx: &QContext, x: &BarElem) -> BarElem {
    Bar::new(ctx).contract(x)
}

/// All words of length `p` whose entries have degree in `1..=max_entry`.
pub fn bar_words(n: usize, p: usize, max_entry: u32) -> Vec<Word> {
    let entries = Monomial::up_to_degree(n, 1, max_entry);
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..p {
        let mut next = Vec::with_capacity(out.len() * entries.len());
        for w in &out {
            for e in &entries {
                let mut w2 = w.clone();
                w2.push(e.clone());
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let b = Bar::new(&ctx);
        let one = Monomial::one(2);
        let x = |i| Monomial::var(2, i);
        let d = b.d(&b.element(vec![x(2), x(1)], one.clone()));
        let mut e = Chain::zero(2, 1);
        e.add_term(x(2), vec![x(1)], one.clone(), Scalar::one());
        e.add_term(one.clone(), vec![Monomial::from_exps(&[1, 1])], one.clone(), ctx.q(1, 2).inv().unwrap().neg());
        e.add_term(one.clone(), vec![x(2)], x(1), Scalar::one());
        assert_eq!(d, e);
    }

    #[test]
    fn s_examples() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let b = Bar::new(&ctx);
        let x = |i| Monomial::var(2, i);
        let s1 = b.contract(&b.element(vec![x(1)], x(2)));
        assert_eq!(s1, b.element(vec![x(1), x(2)], Monomial::one(2)));
        assert!(b.contract(&b.element(vec![x(1)], Monomial::one(2))).is_zero());
    }

    #[test]
    fn delta_squared_and_homotopy_small() {
        let ctx = QContext::symbolic(2, 1).unwrap();
        let b = Bar::new(&ctx);
        for p in 0..=2 {
            for w in bar_words(2, p, 2) {
                for v in Monomial::up_to_degree(2, 0, 2) {
                    let x = b.element(w.clone(), v);
                    if p >= 1 {
                        assert!(b.d(&b.d(&x)).is_zero());
                    }
                    assert!(b.homotopy_residual(&x).is_zero());
                }
            }
        }
    }
}
