use thiserror::Error;

/// Errors produced by the library layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank parameter n = {n} outside supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },

    #[error("label {label} outside 1..={n}")]
    LabelOutOfRange { label: i32, n: usize },

    #[error("transposition ({0}, {0}) is not a reflection")]
    DegenerateTransposition(u8),

    #[error("expected {expected} factors, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("word {0} does not multiply to the long cycle")]
    NotAChain(String),

    #[error("position {position} outside 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("words of different rank parameters ({0} vs {1})")]
    MismatchedRank(usize, usize),

    #[error("no chain with the given inversion data: {0}")]
    NoSuchChain(String),

    #[error("tree is not valid: {0}")]
    InvalidTree(String),

    #[error("tree is not alternating")]
    NotAlternating,

    #[error("tree has crossing edges {0:?} and {1:?}")]
    Crossing((u8, u8), (u8, u8)),

    #[error("word {0} is not a maximal element")]
    NotMaximal(String),

    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),

    #[error("local range violated at position {position}: {detail}")]
    RangeViolation { position: usize, detail: String },

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
