//! The Koszul and normalized bar resolutions, their differentials and
//! contracting homotopies.
//!
//! ```text
//! cargo run --example koszul_contraction
//! ```

use qsym::algebra::{ExtIndex, Monomial, QContext};
use qsym::complexes::{Bar, Koszul, Resolution};

fn main() {
    let ctx = QContext::symbolic(2, 1).unwrap();
    let k = Koszul::new(&ctx);

    let x = k.element(ExtIndex::from_indices(&[1, 2]), Monomial::one(2));
    println!("d(1 ⊗ dx12 ⊗ 1)   = {}", k.d(&x));
    println!("d d(...)          = {}", k.d(&k.d(&x)));

    let y = k.element(ExtIndex::single(1), Monomial::from_exps(&[1, 1]));
    println!("t(1 ⊗ dx1 ⊗ x1x2) = {}", k.contract(&y));
    println!("dt + td - 1 on it = {}", k.homotopy_residual(&y));

    let b = Bar::new(&ctx);
    let w = b.element(vec![Monomial::var(2, 2), Monomial::var(2, 1)], Monomial::var(2, 1));
    println!("bar element       = {w}");
    println!("delta             = {}", b.d(&w));
    println!("s                 = {}", b.contract(&w));
    println!("residual          = {}", b.homotopy_residual(&w));
}
