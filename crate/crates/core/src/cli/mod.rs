//! The `qsym` command-line front end.

mod commands;
pub mod config;
pub mod expr;
pub mod verify;

pub use commands::{run, Outcome, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use config::{Bounds, Config, Fault};
pub use expr::{parse_cocycle, parse_polynomial, parse_scalar, parse_skew_cocycle, print_cocycle, print_skew_cocycle, Env, ParseError};
pub use verify::{run_suite, Suite, SuiteReport};
