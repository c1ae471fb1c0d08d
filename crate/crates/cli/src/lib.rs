//! File format, reports and exit-code conventions behind the `lieschur`
//! binary.

pub mod file;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// The algebra or pair fails an axiom.
    #[error("{0}")]
    Invalid(String),
    /// Unreadable or malformed input.
    #[error("{0}")]
    Input(String),
    /// No usable complement for a pair.
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}
