//! Recursive construction of chain maps between resolutions from a
//! contraction of the target: `f_n = t_{n-1} f_{n-1} d_n` on basis elements.

use std::collections::HashMap;

use crate::complexes::{recast_algebra, Chain, Resolution};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub struct LiftEngine<S: Resolution, T: Resolution> {
    source: S,
    target: T,
    memo: HashMap<(i32, S::Basis), Chain<T::Basis>>,
    check: bool,
}

impl<S: Resolution, T: Resolution> LiftEngine<S, T> {
    /// Lifts the identity of `A`. Every memoized image is checked against
    /// `d f_n = f_{n-1} d` unless checking is turned off.
    pub fn new(source: S, target: T) -> Self {
        LiftEngine {
            source,
            target,
            memo: HashMap::new(),
            check: true,
        }
    }

    pub fn without_checks(mut self) -> Self {
        self.check = false;
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `f_p(1 ⊗ b ⊗ 1)`.
    pub fn lift(&mut self, p: i32, b: &S::Basis) -> Result<Chain<T::Basis>> {
        if let Some(img) = self.memo.get(&(p, b.clone())) {
            return Ok(img.clone());
        }
        let n = self.source.ctx().n();
        let basis = Chain::basis(n, p, b.clone());
        let boundary = self.source.d(&basis);
        let lower = self.apply(&boundary)?;
        let img = self.target.contract(&lower);
        if self.check && self.target.d(&img) != lower {
            return Err(Error::Lift(format!("chain map law fails on degree {p} basis element {b:?}")));
        }
        self.memo.insert((p, b.clone()), img.clone());
        Ok(img)
    }

    /// Bimodule-linear extension of the lifted maps; identity on degree `-1`.
    pub fn apply(&mut self, x: &Chain<S::Basis>) -> Result<Chain<T::Basis>> {
        if x.degree() == -1 {
            return Ok(recast_algebra(x));
        }
        let ctx = self.source.ctx().clone();
        let mut out = Chain::zero(ctx.n(), x.degree());
        for ((u, b, v), c) in x.terms() {
            let img = self.lift(x.degree(), b)?;
            out.add_scaled(&img.bimodule(&ctx, c, u, v), &Scalar::one());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExtIndex, QContext};
    use crate::chainmaps::{phi, psi};
    use crate::complexes::{bar_words, Bar, Koszul};

    #[test]
    fn lifted_maps_match_closed_forms() {
        let ctx = QContext::symbolic(3, 1).unwrap();
        let mut up = LiftEngine::new(Koszul::new(&ctx), Bar::new(&ctx));
        for p in 0..=3 {
            for j in ExtIndex::all_of_len(3, p) {
                assert_eq!(up.lift(p as i32, &j).unwrap(), phi(&ctx, j));
            }
        }
        let mut down = LiftEngine::new(Bar::new(&ctx), Koszul::new(&ctx));
        for p in 0..=2 {
            for w in bar_words(3, p, 2) {
                assert_eq!(down.lift(p as i32, &w).unwrap(), psi(&ctx, &w), "{w:?}");
            }
        }
    }
}
