use alloc::string::String;

use thiserror::Error;

use crate::qexact::MatrixError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("missing input: {0}")]
    MissingInput(&'static str),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("blowup of {r} points is outside the supported range {min}..={max}")]
    UnsupportedRank { r: usize, min: usize, max: usize },
    #[error("classes live on blowups of {left} and {right} points")]
    RankMismatch { left: usize, right: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("linear system has no solution")]
    Inconsistent,
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
