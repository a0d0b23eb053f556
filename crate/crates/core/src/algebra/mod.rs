//! The quantum symmetric algebra `S_q(V)` and its skew group algebras.

mod context;
mod element;
mod exterior;
mod group;
mod monomial;
mod skew;

pub use context::{add_q, twist_ratio, QContext, Twister};
pub use element::{monomial_product, monomials_product, multiply, q_pi, q_pi_word, twist_reorder, AlgebraElement};
pub use exterior::{ext_reorder, sort_sign, wedge_reorder, ExtIndex};
pub use group::{ActionSpec, GroupAction, GroupElement, GroupSpec};
pub use monomial::Monomial;
pub use skew::{skew_multiply, SkewElement};
