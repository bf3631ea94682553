//! Subcommand implementations.

pub mod bounce;
pub mod boundary;
pub mod guide;
pub mod line;
pub mod matching;
pub mod smith;
pub mod state;
pub mod wave;

use crate::output::{validation, CliResult};

/// Unwraps an option the selected operation requires.
pub fn need<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| validation(format!("{flag} is required for this operation")))
}
