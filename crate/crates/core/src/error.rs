use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidCartanType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Weyl group of order {order} exceeds the configured bound {bound}")]
    WeylOrderBound { order: u128, bound: u128 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("{what} exceeded the bound {bound} ({partial} elements generated)")]
    BoundExceeded { what: &'static str, bound: usize, partial: usize },
}

impl Error {
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::WeylOrderBound { .. } | Error::BoundExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
