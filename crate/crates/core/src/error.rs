use thiserror::Error;

use crate::chartab::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("root order must be positive")]
    ZeroOrder,

    #[error("galois exponent {k} is not coprime to order {order}")]
    NotCoprime { k: i64, order: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("group order exceeds the enumeration cap of {cap} elements")]
    EnumerationCap { cap: usize },

    #[error("no prime p = 1 (mod {exponent}) with p > {lower} found below {bound}")]
    NoPrime { exponent: u64, lower: u64, bound: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("table failed validation: {}", summarize(.0))]
    Validation(Vec<Violation>),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn summarize(violations: &[Violation]) -> String {
    match violations {
        [] => "no violations".to_owned(),
        [only] => only.to_string(),
        [first, rest @ ..] => format!("{first} (and {} more)", rest.len()),
    }
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
