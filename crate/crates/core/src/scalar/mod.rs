//! Exact scalars: rationals, cyclotomic numbers and Laurent polynomials in
//! the commutation parameters.

mod cyclotomic;
mod laurent;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyc, MAX_ORDER};
pub use laurent::{pair_slot, slot_pair, QExp, Scalar};


/// Rational numbers with 128-bit numerator and denominator. All arithmetic in
/// the crate is exact; overflow panics rather than wrapping.
pub type Rational = num_rational::Ratio<i128>;
