use thiserror::Error;

/// Errors surfaced by parsing, preconditions, and the exact oracle's size cap.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid k: {0}")]
    InvalidK(String),

    #[error("instance too large for oracle: n = {n} exceeds cap {cap}")]
    InstanceTooLarge { n: usize, cap: usize },

    #[error("not a forest: edge ({u}, {v}) closes a cycle")]
    NotAForest { u: usize, v: usize },

    #[error("maximum degree is {found}, but this solver requires at most {limit}")]
    DegreeExceeded { found: usize, limit: usize },

    #[error("crossing chords: ({}, {}) crosses ({}, {})", .first.0, .first.1, .second.0, .second.1)]
    CrossingChords {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("invalid outerplanar embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
