use thiserror::Error;

/// Errors raised by the algebra and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ill-formed input: {0}")]
    IllFormed(String),
    /// The product exists but is not determined by the relations this crate knows.
    #[error("product {left} * {right} is not determined by the known relations")]
    UnknownProduct { left: String, right: String },
    #[error("no realization known for class {0:?}")]
    UnknownClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
