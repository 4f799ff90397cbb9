use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("line {line}: {message}")]
    Line { line: u64, message: String },
    #[error("the {0} variant has no fast {1} algorithm")]
    Unsupported(&'static str, &'static str),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// Process exit status: 1 for bad input, 2 for failed internal checks.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 2,
            _ => 1,
        }
    }
}

impl From<frechet_gap_core::Error> for CliError {
    fn from(e: frechet_gap_core::Error) -> Self {
        use frechet_gap_core::Error as E;
        match e {
            E::Internal(_) | E::ContractViolation => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
