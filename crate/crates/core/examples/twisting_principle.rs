//! Products in the quantum plane and the twisting ratio that relates a
//! classical formula to its quantum version.
//!
//! ```text
//! cargo run --example twisting_principle
//! ```

use qsym::algebra::{monomial_product, multiply, twist_ratio, AlgebraElement, Monomial, QContext, Twister};

fn main() {
    let ctx = QContext::symbolic(2, 1).unwrap();
    let x1 = AlgebraElement::var(2, 1);
    let x2 = AlgebraElement::var(2, 2);

    // x2 x1 = q21 x1 x2, printed as q12^-1
    println!("x2 * x1          = {}", multiply(&ctx, &x2, &x1));
    println!("x2 * x1^2        = {}", multiply(&ctx, &x2, &multiply(&ctx, &x1, &x1)));

    let (c, m) = monomial_product(&ctx, &Monomial::from_exps(&[1, 2]), &Monomial::from_exps(&[2, 1]));
    println!("(x1 x2^2)(x1^2 x2) = ({c}) {m}");

    // The coefficient attached to a rearrangement of letters is c(old)/c(new).
    let mut old = Twister::new(2);
    old.push_letters([2, 2, 1]);
    let mut new = Twister::new(2);
    new.push_letters([1, 2, 2]);
    println!("c(x2 x2 x1) / c(x1 x2 x2) = {}", twist_ratio(&ctx, &old, &new));

    let classical = QContext::classical(2);
    println!("at q = 1: x2 * x1 = {}", multiply(&classical, &x2, &x1));
}
