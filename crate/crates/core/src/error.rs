use thiserror::Error;

use crate::group::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cap exceeded: {what} has order {order}, limit is {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(Elem),
    #[error("table is not a latin square: {0}")]
    NotLatinSquare(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element {0} is not an m-element")]
    NotAnMElement(Elem),
    #[error("m and n must be coprime (got m={m}, n={n})")]
    NotCoprime { m: u64, n: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("point {point} repeated in cycle notation at position {pos}")]
    RepeatedPoint { point: usize, pos: usize },
    #[error("parse error on row {row}: {msg}")]
    Parse { row: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
    #[error("order mismatch: |G| = {order} but m*n = {product}")]
    OrderMismatch { order: usize, product: u64 },
    #[error("not a p-group: order {0}")]
    NotAPGroup(usize),
    #[error("not a semidirect decomposition: {0}")]
    NotSemidirect(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
