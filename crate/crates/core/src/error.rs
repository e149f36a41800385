use thiserror::Error;

use crate::dynkin::{Letter, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {letter}")]
    InvalidRank { letter: Letter, rank: u32 },

    #[error("diagram has rank {rank}, at most {max} vertices are supported")]
    DiagramTooLarge { rank: usize, max: usize },

    #[error("vertex {vertex} out of range 1..={rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },

    #[error("weights live on different diagrams")]
    DiagramMismatch,

    #[error("expected {expected} coefficients, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("integer overflow in weight arithmetic")]
    Overflow,

    #[error("vertex {0} is in theta")]
    AlphaInTheta(Vertex),

    #[error("NotInPicard({0}): coefficient at theta vertex {0} is nonzero")]
    NotInPicard(Vertex),

    #[error("lambda meets theta at vertex {0}")]
    LambdaMeetsTheta(Vertex),

    #[error("theta and lambda overlap at vertex {0}")]
    ThetaLambdaOverlap(Vertex),

    #[error("theta is not empty; not a Borel quotient")]
    NotBorel,

    #[error("vertex {alpha} is adjacent to theta vertex {beta}")]
    NotOrthogonal { alpha: Vertex, beta: Vertex },

    #[error("rank {rank} exceeds enumeration limit {limit}")]
    RankLimitExceeded { rank: usize, limit: usize },
}
