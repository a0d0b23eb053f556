//! The comparison maps between the Koszul and bar resolutions, checked
//! against the maps produced by the generic lifting procedure.
//!
//! ```text
//! cargo run --example comparison_maps
//! ```

use qsym::algebra::{ExtIndex, Monomial, QContext};
use qsym::chainmaps::{phi, phi_chain, psi, psi_chain, LiftEngine};
use qsym::complexes::{Bar, Koszul, Resolution};

fn main() {
    let ctx = QContext::symbolic(3, 1).unwrap();

    let j = ExtIndex::from_indices(&[1, 2]);
    let up = phi(&ctx, j);
    println!("Phi(dx12) = {up}");
    println!("Psi(Phi(dx12)) = {}", psi_chain(&ctx, &up));

    let w = vec![Monomial::from_exps(&[2, 0, 0]), Monomial::from_exps(&[0, 1, 1])];
    let down = psi(&ctx, &w);
    println!("Psi[x1^2 | x2x3] = {down}");

    let k = Koszul::new(&ctx);
    let b = Bar::new(&ctx);
    let x = k.element(ExtIndex::from_indices(&[1, 2, 3]), Monomial::one(3));
    let lhs = b.d(&phi_chain(&ctx, &x));
    let rhs = phi_chain(&ctx, &k.d(&x));
    println!("delta Phi = Phi d on dx123: {}", lhs == rhs);

    let mut engine = LiftEngine::new(Koszul::new(&ctx), Bar::new(&ctx));
    let lifted = engine.lift(2, &j).unwrap();
    println!("lifted Phi(dx12) agrees: {}", lifted == up);

    let mut engine = LiftEngine::new(Bar::new(&ctx), Koszul::new(&ctx));
    let lifted = engine.lift(2, &w).unwrap();
    println!("lifted Psi agrees: {} ({} memo entries)", lifted == down, engine.memo_len());
}
