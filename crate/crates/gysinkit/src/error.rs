use thiserror::Error;

/// Errors shared across the crate.
///
/// The CLI maps these onto exit codes: malformed input and validation
/// failures exit with 2, unsupported dimensions or modes with 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unsupported dimension {dim}: {reason}")]
    UnsupportedDimension { dim: usize, reason: String },

    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedInput(_) | Error::Validation(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::UnsupportedDimension { .. } | Error::UnsupportedMode(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
