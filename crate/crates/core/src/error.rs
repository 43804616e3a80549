use thiserror::Error;

use crate::dissection::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus 1 is not supported")]
    ModulusOne,
    #[error("this operation needs a modulus N >= 2, not integer mode")]
    IntegerMode,
    #[error("modulus {0} is not supported here (expected {1})")]
    UnsupportedModulus(u32, &'static str),
    #[error("sequence must be nonempty")]
    EmptySequence,
    #[error("sequence has length {got}, need at least {need}")]
    TooShort { need: usize, got: usize },
    #[error("sum operands need length >= 2, got {0} and {1}")]
    SumOperands(usize, usize),
    #[error("({0}) is not a solution")]
    NotASolution(String),
    #[error("cannot parse sequence: {0}")]
    Parse(String),
    #[error("estimated work {estimate} exceeds the bound {bound}; raise the bound to proceed")]
    WorkBound { estimate: u128, bound: u128 },
    #[error("shard {index} out of range for {count} shards")]
    InvalidShard { index: usize, count: usize },
    #[error("no power of the generator reached ±Id within {0} steps")]
    OrderNotFound(u64),
    #[error("invalid dissection: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidDissection(Vec<Violation>),
    #[error("dissection kind mismatch: {0}")]
    KindMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no decomposition against the base list for ({0})")]
    NoBaseDecomposition(String),
}
