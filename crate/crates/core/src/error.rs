use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("set is not invariant: chord ({}, {}) has exactly one endpoint inside", chord.0, chord.1)]
    NotInvariant { chord: (usize, usize) },
    #[error("chords share endpoint {0}")]
    SharedEndpoint(usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("set is not closed under elementary moves: {0}")]
    NotClosed(String),
    #[error("descent vector is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("refusing computation: {0}")]
    Bound(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
