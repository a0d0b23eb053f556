//! Deciding whether a cocycle of the skew Koszul complex is a coboundary.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{ExtIndex, GroupAction, GroupElement, Monomial, QContext};
use crate::error::{Error, Result};
use crate::scalar::Cyc;

use super::cochain::{skew_diff, SkewKoszulCochain};

type Key = (Monomial, GroupElement, ExtIndex);

/// Whether `b = A x` has a solution, by row reduction of `[A | b]`.
fn solvable(mut rows: Vec<Vec<Cyc>>, cols: usize) -> bool {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<Cyc> = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    rows[r..].iter().all(|row| row[cols].is_zero())
}

/// Whether `x = d y` for some cochain `y`. The differential preserves the
/// group element and `|l| - |I|`, so the question splits into finite strata.
pub fn is_coboundary(ctx: &QContext, action: &GroupAction, x: &SkewKoszulCochain) -> Result<bool> {
    if ctx.is_symbolic() {
        return Err(Error::SymbolicUnsupported);
    }
    let m = x.degree();
    let n = ctx.n();
    let mut strata: BTreeMap<(GroupElement, i64), Vec<(Key, Cyc)>> = BTreeMap::new();
    for ((l, g, i), c) in x.terms() {
        let c = ctx.specialize(c)?.as_cyc().ok_or(Error::SymbolicUnsupported)?;
        let diff = l.degree() as i64 - i.len() as i64;
        strata.entry((g.clone(), diff)).or_default().push(((l.clone(), g.clone(), *i), c));
    }
    if m == 0 {
        return Ok(strata.is_empty());
    }
    for ((g, diff), target) in strata {
        let src_deg = diff + m as i64 - 1;
        let mut images = Vec::new();
        if src_deg >= 0 {
            for l in Monomial::of_degree(n, src_deg as u32) {
                for i in ExtIndex::all_of_len(n, m - 1) {
                    let y = SkewKoszulCochain::basis(l.clone(), g.clone(), i);
                    let mut col = BTreeMap::new();
                    for (k, c) in skew_diff(ctx, action, &y).terms() {
                        col.insert(k.clone(), ctx.specialize(c)?.as_cyc().ok_or(Error::SymbolicUnsupported)?);
                    }
                    images.push(col);
                }
            }
        }
        let keys: BTreeSet<Key> = images.iter().flat_map(|c| c.keys().cloned()).chain(target.iter().map(|(k, _)| k.clone())).collect();
        let target: BTreeMap<Key, Cyc> = target.into_iter().collect();
        let rows: Vec<Vec<Cyc>> = keys
            .iter()
            .map(|k| {
                let mut row: Vec<Cyc> = images.iter().map(|c| c.get(k).cloned().unwrap_or_else(Cyc::zero)).collect();
                row.push(target.get(k).cloned().unwrap_or_else(Cyc::zero));
                row
            })
            .collect();
        if !solvable(rows, images.len()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ActionSpec, GroupSpec};
    use crate::scalar::Scalar;

    #[test]
    fn classical_line() {
        let ctx = QContext::classical(1);
        let act = GroupAction::trivial(1);
        let e = act.group().identity();
        let x = SkewKoszulCochain::basis(Monomial::one(1), e.clone(), ExtIndex::single(1));
        assert!(!is_coboundary(&ctx, &act, &x).unwrap());
    }

    #[test]
    fn twisted_sector_is_exact() {
        let ctx = QContext::specialized(1, 2, &[]).unwrap();
        let act = GroupAction::new(&ctx, GroupSpec::new(vec![2]).unwrap(), &ActionSpec::Diagonal(vec![vec![1]])).unwrap();
        let g = act.group().generator(0);
        let x = SkewKoszulCochain::term(Scalar::from_int(2), Monomial::var(1, 1), g.clone(), ExtIndex::single(1));
        assert!(is_coboundary(&ctx, &act, &x).unwrap());
        let y = SkewKoszulCochain::basis(Monomial::one(1), g, ExtIndex::single(1));
        assert!(!is_coboundary(&ctx, &act, &y).unwrap());
    }

    #[test]
    fn symbolic_rejected() {
        let ctx = QContext::symbolic(1, 1).unwrap();
        let act = GroupAction::trivial(1);
        let x = SkewKoszulCochain::zero(1);
        assert_eq!(is_coboundary(&ctx, &act, &x), Err(Error::SymbolicUnsupported));
    }
}
