//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Cyclotomic order below 2 or otherwise unusable.
    #[error("invalid cyclotomic order {0}: order must be at least 2")]
    InvalidOrder(u32),

    /// An operation that requires a prime modulus got a composite one.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Inversion of zero in a field.
    #[error("division by zero")]
    DivisionByZero,

    /// Two operands live in different rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A map image that must be a unit monomial is not one.
    #[error("image of invertible variable `{0}` is not a unit monomial")]
    NotAUnit(String),

    /// The target field cannot host the requested structure (e.g. lacks
    /// an n-th root of unity, or a coefficient denominator vanishes).
    #[error("field error: {0}")]
    Field(String),

    /// Text that failed to parse as a polynomial or scalar.
    #[error("parse error: {0}")]
    Parse(String),

    /// Weight bookkeeping produced a non-integral unit exponent; this
    /// signals an internal bug, never bad user input.
    #[error("weight balancing failed: {0}")]
    WeightBalance(String),

    /// A point that is required to avoid the excluded locus lies on it.
    #[error("point lies on the excluded locus: {0}")]
    OnExcludedLocus(String),

    /// Invalid command-line usage.
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
