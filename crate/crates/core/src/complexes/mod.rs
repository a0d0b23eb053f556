//! The Koszul and normalized bar resolutions of `S_q(V)`.

mod bar;
mod chain;
mod koszul;

pub use bar::{bar_delta, bar_s, bar_words, Bar, BarElem};
pub use chain::{recast_algebra, Chain, ChainBasis, Resolution, Word};
pub use koszul::{koszul_d, koszul_left_basis, koszul_t, Koszul, KoszulElem};
