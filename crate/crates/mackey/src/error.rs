//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed group spec: {0}")]
    GroupSpec(String),

    #[error("group order {order} exceeds the size limit {limit}")]
    SizeLimit { order: usize, limit: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0}")]
    Validation(String),

    #[error("division by zero in cyclotomic field")]
    CyclotomicDivisionByZero,

    #[error("galois exponent {k} is not coprime to the conductor {n}")]
    GaloisExponent { k: u64, n: u64 },

    #[error("not a virtual character: inner product with an irreducible is not an integer")]
    NotVirtualCharacter,

    #[error("base ring is not commutative: {0}")]
    NonCommutative(String),

    #[error("quotient is not levelwise free (torsion {0:?}); extend scalars to work rationally")]
    NotLevelwiseFree(Vec<String>),

    #[error("{0}")]
    Usage(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
