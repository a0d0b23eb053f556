//! Invariant 2-cocycles of `S_q(V) ⋊ G` whose self-bracket vanishes give
//! noncommutative Poisson structures. Two situations where this happens.
//!
//! ```text
//! cargo run --example noncommutative_poisson
//! ```

use qsym::algebra::{ActionSpec, ExtIndex, GroupAction, GroupSpec, Monomial, QContext};
use qsym::group_ext::{bracket_skew_closed, bracket_skew_pipeline, is_coboundary, reynolds, skew_diff, SkewKoszulCochain};
use qsym::scalar::Cyc;

fn main() {
    // Diagonal action: unit-coefficient cocycles in twisted sectors.
    let ctx = QContext::symbolic(2, 2).unwrap();
    let group = GroupSpec::new(vec![2]).unwrap();
    let action = GroupAction::new(&ctx, group.clone(), &ActionSpec::Diagonal(vec![vec![1], vec![1]])).unwrap();
    let g = group.generator(0);
    let alpha = SkewKoszulCochain::basis(Monomial::one(2), g.clone(), ExtIndex::from_indices(&[1, 2]));
    let br = bracket_skew_closed(&ctx, &action, &alpha, &alpha).unwrap();
    println!("Z/2 by -1: [R(1 # g dx12), R(1 # g dx12)] = {br}");

    // The swap x1 <-> x2 on the plane with q12 = -1.
    let ctx = QContext::specialized(2, 2, &[((1, 2), Cyc::from_int(-1))]).unwrap();
    let swap = ActionSpec::MonomialMatrix(vec![vec![(Cyc::one(), 2), (Cyc::one(), 1)]]);
    let action = GroupAction::new(&ctx, group, &swap).unwrap();
    for idx in [ExtIndex::from_indices(&[1, 2]), ExtIndex::empty()] {
        let alpha = reynolds(&ctx, &action, &SkewKoszulCochain::basis(Monomial::one(2), g.clone(), idx));
        if alpha.is_zero() || !skew_diff(&ctx, &action, &alpha).is_zero() {
            continue;
        }
        let br = bracket_skew_pipeline(&ctx, &action, &alpha, &alpha).unwrap();
        println!("swap: alpha = {alpha}");
        println!("      [alpha, alpha] = {br}, exact: {}", is_coboundary(&ctx, &action, &br).unwrap());
    }
}
