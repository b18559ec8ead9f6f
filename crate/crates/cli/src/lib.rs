//! Library half of the `quadrics` command-line tool. Commands render into an
//! [`Output`] so they can be tested without spawning the binary.

pub mod cache;
pub mod commands;
pub mod config;
pub mod reference;
pub mod verify;

use std::fmt;

pub use commands::{run, Output};
pub use config::{Command, Format, MethodSel, NRange, RunConfig};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed check or a disagreement between methods.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for bad arguments or configuration.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Failure(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Core errors caused by the request itself (too large, empty) are usage
/// errors; broken invariants are failures.
impl From<quadrics_core::Error> for CliError {
    fn from(e: quadrics_core::Error) -> Self {
        use quadrics_core::Error as E;
        match e {
            E::EmptyInput(_) | E::CutoffExceeded { .. } | E::Invalid { .. } => CliError::Usage(e.to_string()),
            E::InvariantFailure { .. } => CliError::Failure(e.to_string()),
        }
    }
}
