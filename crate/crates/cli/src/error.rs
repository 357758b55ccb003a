use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes. Usage errors exit with 2 (clap's default).
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const PARSE: i32 = 3;
    pub const VALIDATION: i32 = 4;
    pub const IO: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation failed: {0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Parse { .. } => exit::PARSE,
            CliError::Validation(_) => exit::VALIDATION,
        }
    }
}

impl From<symplectic_qec::Error> for CliError {
    fn from(e: symplectic_qec::Error) -> Self {
        match e {
            symplectic_qec::Error::InvalidInput(msg) => CliError::Validation(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}
