use thiserror::Error;

/// Errors raised by the exact computations.
///
/// Variants that correspond to a failed divisibility or a surviving
/// fractional exponent are never swallowed: when they come out of a
/// theorem check they mean the computed instance contradicts the statement
/// (or the engine has a bug).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("fractional q-exponent present: {0}")]
    FractionalExponent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("input too large for the oracle (size {size}, cap {cap})")]
    TooLarge { size: usize, cap: usize },
    #[error("size cap exceeded (n = {n}, cap {cap})")]
    SizeCap { n: usize, cap: usize },
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("{d} does not divide every part of {partition}")]
    NotDivisor { d: u32, partition: String },
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("fractional exponents survived the torus-knot sum: {0}")]
    LatticeResidue(String),
    #[error("unsupported flavor: {0}")]
    UnsupportedFlavor(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("internal divisibility failure: {0}")]
    InternalDivisibility(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
