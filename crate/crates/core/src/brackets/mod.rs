//! Gerstenhaber brackets on the Hochschild cohomology of `S_q(V)`.

mod closed;
mod cochain;
mod hh;
mod schouten;

pub use closed::{bracket_closed, bracket_closed_basis, insertion_terms, InsertionTerm};
pub use cochain::{bracket_bar, circle, BarCochain, CochainValue, KoszulCochain};
pub use hh::{bracket_pipeline, c_membership, from_koszul, gamma_of, hh_basis, to_koszul};
pub use schouten::schouten_classical;
