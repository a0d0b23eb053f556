pub mod algebra;
pub mod brackets;
pub mod chainmaps;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod group_ext;
pub mod scalar;

pub use error::{Error, Result};
