use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial expansion needs n >= 1 and i >= 1 (got n = {n}, i = {i})")]
    InvalidExpansion { n: BigUint, i: usize },

    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    #[error("not an O-sequence: h_{degree} = {value} exceeds the Macaulay bound {bound}")]
    NotOSequence {
        degree: usize,
        value: BigUint,
        bound: BigUint,
    },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("search budget exceeded: {needed} candidates > budget {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },

    #[error("invalid characteristic: {0}")]
    InvalidChar(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("algebra is not artinian up to degree {cap}")]
    NotArtinian { cap: usize },

    #[error("certificate replay failed at step {step}: {reason}")]
    Replay { step: usize, reason: String },

    #[error("malformed input: {0}")]
    Parse(String),
}
