//! Hochschild cohomology and brackets for `S_q(V) ⋊ G`.

mod closed;
mod coboundary;
mod cochain;
mod theta_gamma;

pub use closed::{bracket_skew_closed, bracket_skew_closed_basis};
pub use coboundary::is_coboundary;
pub use cochain::{act_cochain, cg_membership, hh_skew_basis, is_invariant, reynolds, skew_diff, SkewKoszulCochain};
pub use theta_gamma::{bracket_skew_pipeline, gamma, theta};
