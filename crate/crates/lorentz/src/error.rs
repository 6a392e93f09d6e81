use std::path::Path;

use thiserror::Error;

/// Errors surfaced by the harness and the command line. All of them are
/// usage or input problems; failed inequality checks are reported, not raised.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}` (see `lorentz check --help` for the list)")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{origin}: line {line}, column {column}: {message}")]
    Syntax { origin: String, line: usize, column: usize, message: String },
    #[error("{origin}: {field}: {message}")]
    Field { origin: String, field: String, message: String },
    #[error("{0}")]
    Domain(#[from] lorentz_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl HarnessError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.display().to_string(), source }
    }
}
