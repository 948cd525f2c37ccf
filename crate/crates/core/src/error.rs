use std::io;

use thiserror::Error;

/// Errors produced by the library and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad user input: malformed spec files, invalid flags, out-of-domain parameters.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An operation was called outside its documented preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A requested segment, stream or table would exceed the memory budget.
    #[error("resource budget exceeded: {what} needs {needed} bytes, budget is {budget} bytes")]
    Resource {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    /// Non-finite or overflowing numeric result.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Gamma function evaluated at a pole.
    #[error("gamma function has a pole at {0}")]
    Pole(f64),

    /// Two censuses (or a census and a boundary) that cannot be combined.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty census")]
    EmptyCensus,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Exit code used by the CLI: 2 for argument and config problems, 3 for
    /// numeric and resource failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
            Error::DimensionMismatch(_) => 2,
            Error::Resource { .. } | Error::Numeric(_) | Error::Pole(_) | Error::EmptyCensus => 3,
            Error::Io(_) => 3,
        }
    }
}
