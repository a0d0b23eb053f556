//! Comparison morphisms between the Koszul and bar resolutions.

mod dq;
mod lift;
mod phi_psi;

pub use dq::{dq, dq_element, psi_via_dq, sigma, sigma_inv, t_via_dq, tau, EnvElem, EnvWedge};
pub use lift::LiftEngine;
pub use phi_psi::{extend, phi, phi_chain, psi, psi_chain};
