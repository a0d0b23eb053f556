//! Quantum difference quotients and the alternative formulas for the
//! contraction and for Psi built from them.
//!
//! ```text
//! cargo run --example difference_quotients
//! ```

use qsym::algebra::{ExtIndex, Monomial, QContext};
use qsym::chainmaps::{dq, psi, psi_via_dq, sigma, sigma_inv, t_via_dq, tau, EnvElem};
use qsym::complexes::{Koszul, Resolution};
use qsym::scalar::Scalar;

fn main() {
    let ctx = QContext::symbolic(2, 1).unwrap();
    let m = Monomial::from_exps(&[2, 1]);
    println!("dq_1(x1^2 x2) = {}", dq(&ctx, 1, &m));
    println!("dq_2(x1^2 x2) = {}", dq(&ctx, 2, &m));

    let x = EnvElem::term(Scalar::one(), Monomial::from_exps(&[1, 2]), Monomial::one(2));
    println!("tau_1(x1 x2^2 ⊗ 1) = {}", tau(&ctx, 1, &x));

    let k = Koszul::new(&ctx);
    let y = k.element(ExtIndex::single(1), Monomial::from_exps(&[1, 2]));
    let via = sigma(&ctx, 2, &t_via_dq(&ctx, &sigma_inv(&ctx, &y)));
    println!("t on 1 ⊗ dx1 ⊗ x1x2^2: {}", k.contract(&y));
    println!("same via dq:           {}", via == k.contract(&y));

    let w = vec![Monomial::from_exps(&[0, 1]), Monomial::from_exps(&[2, 0])];
    println!("Psi via dq agrees: {}", sigma(&ctx, 2, &psi_via_dq(&ctx, &w)) == psi(&ctx, &w));
}
