use thiserror::Error;

use crate::value::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wrong domain: expected {expected}, found {found}")]
    WrongDomain { expected: Domain, found: Domain },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid encoding: {0}")]
    InvalidEncoding(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("arity mismatch in `{term}`: {msg}")]
    Arity { term: String, msg: String },

    #[error("ack bound exceeded: ack({m}, {n})")]
    AckBound { m: String, n: String },

    #[error("unsupported construct: {0}")]
    Unsupported(String),

    #[error("malformed program: {0}")]
    MalformedProgram(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("search bound exceeded: no witness below {0}")]
    SearchBound(String),

    #[error("oracle violates h(0) = 0")]
    OracleZero,

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("value too large: {0}")]
    TooLarge(String),
}
