use std::io;
use std::path::PathBuf;

use qhsynth_core::Error as CoreError;

/// A failed command together with the exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Bound(CoreError),
    #[error("circuit width {width} exceeds {limit} qubits: unverifiable at desk scale")]
    Unverifiable { width: usize, limit: usize },
    #[error("{0}")]
    Infeasible(String),
    #[error("circuit is not lowered: {0}")]
    NotLowered(CoreError),
    #[error("{0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Invalid(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 1,
            CliError::Usage(_) | CliError::Invalid(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Unverifiable { .. } => 4,
            CliError::Infeasible(_) => 5,
            CliError::NotLowered(_) => 6,
            CliError::Verification(_) => 7,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BoundViolation { .. }
            | CoreError::DepthExceedsControls { .. }
            | CoreError::TooFewControls { .. } => CliError::Bound(e),
            CoreError::WidthTooLarge { width, limit } => CliError::Unverifiable { width, limit },
            CoreError::NotLowered(_) => CliError::NotLowered(e),
            other => CliError::Invalid(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
