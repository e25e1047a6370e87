use shutter_core::{ShutterError, TableError};
use thiserror::Error;

/// Process exit status for success.
pub const EXIT_OK: i32 = 0;
/// Bad command line, unreadable config or unwritable output.
pub const EXIT_USAGE: i32 = 1;
/// A physical precondition does not hold.
pub const EXIT_DOMAIN: i32 = 2;
/// `verify` found at least one failing check.
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Table(#[from] TableError),

    #[error(transparent)]
    Physics(#[from] ShutterError),

    #[error("verification failed: {}", .0.join(", "))]
    Verify(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Table(TableError::Grid { .. }) => EXIT_USAGE,
            CliError::Table(TableError::Io(_)) => EXIT_USAGE,
            CliError::Table(TableError::Json(_)) => EXIT_USAGE,
            CliError::Table(_) => EXIT_DOMAIN,
            CliError::Physics(_) => EXIT_DOMAIN,
            CliError::Verify(_) => EXIT_VERIFY,
        }
    }
}
