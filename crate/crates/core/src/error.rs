//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division by {0} is not exact")]
    DivisionNotExact(String),
    #[error("central element acts non-scalarly on irrep {0}")]
    NonScalarAction(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("result not certified at this truncation; retry with N = {0} or allow uncertified output")]
    Uncertified(usize),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
