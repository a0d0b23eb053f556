//! Hochschild cocycles of the quantum plane and their Gerstenhaber
//! brackets, computed both in closed form and by transport through the bar
//! resolution.
//!
//! ```text
//! cargo run --example hochschild_brackets
//! ```

use qsym::algebra::{ExtIndex, Monomial, QContext};
use qsym::brackets::{bracket_closed, bracket_pipeline, hh_basis, schouten_classical, KoszulCochain};

fn main() {
    let ctx = QContext::symbolic(2, 1).unwrap();
    for m in 0..=2 {
        let basis: Vec<String> = hh_basis(&ctx, m, 3).iter().map(|c| c.to_string()).collect();
        println!("HH^{m} basis (degree <= 3): {}", basis.join(", "));
    }

    let x1dx1 = KoszulCochain::basis(Monomial::var(2, 1), ExtIndex::single(1));
    let x2dx2 = KoszulCochain::basis(Monomial::var(2, 2), ExtIndex::single(2));
    let closed = bracket_closed(&ctx, &x1dx1, &x2dx2);
    let pipe = bracket_pipeline(&ctx, &x1dx1, &x2dx2);
    println!("[x1 dx1, x2 dx2] = {closed}  (pipeline agrees: {})", closed == pipe);

    let pi = KoszulCochain::basis(Monomial::one(2), ExtIndex::from_indices(&[1, 2]));
    println!("[x1 dx1, dx12] = {}", bracket_closed(&ctx, &x1dx1, &pi));
    let pi = KoszulCochain::basis(Monomial::from_exps(&[1, 1]), ExtIndex::from_indices(&[1, 2]));
    println!("[x1 dx1, x1x2 dx12] = {}", bracket_closed(&ctx, &x1dx1, &pi));

    // At q = 1 the bracket is the Schouten bracket of polyvector fields.
    let cl = QContext::classical(2);
    let a = KoszulCochain::basis(Monomial::var(2, 1), ExtIndex::single(2));
    let b = KoszulCochain::basis(Monomial::var(2, 2), ExtIndex::single(1));
    println!("[x1 dx2, x2 dx1] = {}", bracket_closed(&cl, &a, &b));
    println!("Schouten          = {}", schouten_classical(&cl, &a, &b).unwrap());
}
