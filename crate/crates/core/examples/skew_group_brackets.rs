//! Brackets on Hochschild cohomology of a skew group algebra `S_q(V) ⋊ G`
//! for a cyclic group acting diagonally.
//!
//! ```text
//! cargo run --example skew_group_brackets
//! ```

use qsym::algebra::{ActionSpec, ExtIndex, GroupAction, GroupSpec, Monomial, QContext};
use qsym::group_ext::{bracket_skew_closed, bracket_skew_pipeline, hh_skew_basis, reynolds, SkewKoszulCochain};

fn main() {
    // Z/3 acting by x1 -> ζ x1, x2 -> ζ^2 x2.
    let ctx = QContext::symbolic(2, 3).unwrap();
    let group = GroupSpec::new(vec![3]).unwrap();
    let action = GroupAction::new(&ctx, group.clone(), &ActionSpec::Diagonal(vec![vec![1], vec![2]])).unwrap();

    for m in 0..=2 {
        let n = hh_skew_basis(&ctx, &action, m, 3).unwrap().len();
        println!("degree {m}: {n} basis cocycles with monomial degree <= 3");
    }

    let g = group.generator(0);
    let e = group.identity();
    let a = SkewKoszulCochain::basis(Monomial::var(2, 1), e.clone(), ExtIndex::single(1));
    let b = SkewKoszulCochain::basis(Monomial::from_exps(&[1, 1]), e, ExtIndex::from_indices(&[1, 2]));
    let (ra, rb) = (reynolds(&ctx, &action, &a), reynolds(&ctx, &action, &b));
    println!("R(a) = {ra}");
    println!("R(b) = {rb}");
    let closed = bracket_skew_closed(&ctx, &action, &a, &b).unwrap();
    let pipe = bracket_skew_pipeline(&ctx, &action, &ra, &rb).unwrap();
    println!("[R(a), R(b)] = {closed}  (pipeline agrees: {})", closed == pipe);

    // Twisted sectors carry the group element along.
    let t = SkewKoszulCochain::basis(Monomial::one(2), g, ExtIndex::from_indices(&[1, 2]));
    let closed = bracket_skew_closed(&ctx, &action, &a, &t).unwrap();
    println!("[R(a), R(1 # g dx12)] = {closed}");
}
