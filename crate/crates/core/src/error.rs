use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: edge references unknown node {node}")]
    Reference { line: usize, node: u64 },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A desk-scale limit was exceeded; `limit` names the cap.
    #[error("capacity exceeded: {what} (limit {limit}); use a smaller input or raise the limit")]
    Capacity { what: String, limit: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// Coarse error classes, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Capacity,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Io(_)
            | Error::Parse { .. }
            | Error::Reference { .. }
            | Error::Validation { .. }
            | Error::Parameter(_)
            | Error::Contract(_)
            | Error::Json(_) => ErrorKind::Input,
            Error::Capacity { .. } => ErrorKind::Capacity,
            Error::Csv(_) => ErrorKind::Internal,
        }
    }
}
