use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },

    #[error("unknown algebra `{0}` (expected a family letter A-G followed by a rank, e.g. `E6`)")]
    UnknownAlgebra(String),

    #[error("vector has length {got}, expected rank {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertex {vertex} is outside 1..={rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },

    #[error("the set of label-one vertices is empty")]
    EmptyPi1,

    #[error("gradation with labels {0} is not fundamental")]
    NotFundamental(String),

    #[error("label vector is not of real type: {0}")]
    RealType(#[from] crate::satake::RealTypeViolation),

    #[error("invalid Satake diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown real form `{name}`; available for {algebra}: {available}")]
    UnknownRealForm {
        name: String,
        algebra: String,
        available: String,
    },

    #[error(
        "gradation has labels {got}, expected the 0/1 labels {expected} of the chosen vertices"
    )]
    GradationMismatch { expected: String, got: String },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("rank {rank} exceeds the enumeration bound {bound}; raise it with --max-rank")]
    RankBound { rank: usize, bound: usize },

    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("unsupported output format `{0}` (expected `text` or `json`)")]
    UnsupportedFormat(String),
}
