//! Library side of the `brauerkit` binary: input handling, the
//! subcommands and the verification harness.

pub mod commands;
pub mod input;
pub mod report;
pub mod verify;

use thiserror::Error;

/// Failures of a subcommand. Each maps to a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("infinite type: {0}")]
    Infinite(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 parse, 2 validation, 3 unsupported construction, 4 infinite type,
    /// 5 verification failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Infinite(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}
