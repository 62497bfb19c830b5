//! Error type shared by all modules.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("asymmetric gram matrix: entry ({row},{col}) != entry ({col},{row})")]
    AsymmetricGram { row: usize, col: usize },

    #[error("gram matrix is not square: row {row} has {len} entries, expected {expected}")]
    RaggedGram { row: usize, len: usize, expected: usize },

    #[error("invalid Gabrielov triple ({p},{q},{r}): p, q, r must all be >= 2")]
    InvalidGabrielovTriple { p: i64, q: i64, r: i64 },

    #[error("sphere class has square {square}, expected -2")]
    SphereSquare { square: BigInt },

    #[error("degenerate frame")]
    DegenerateFrame,

    #[error("non-positive frame vector")]
    NonPositiveFrameVector,

    #[error("frame does not span a positive 2-plane")]
    FrameNotPositivePlane,

    #[error("frame required for custom lattice")]
    FrameRequired,

    #[error("sequence not homologically trivial")]
    NotHomologicallyTrivial,

    #[error("degenerate projection: vertex at origin")]
    VertexAtOrigin,

    #[error("degenerate projection: segment through origin")]
    SegmentThroughOrigin,

    #[error("loop is not closed")]
    LoopNotClosed,

    #[error("mutation index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("mutations require an expanded sequence (repeat = 1), got repeat = {repeat}")]
    RepeatNotExpanded { repeat: u32 },

    #[error("inconsistent 6-manifold characteristic numbers: p1*c1 - c1^3 = {value} is not divisible by 48")]
    InconsistentChar6 { value: i64 },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Shorthand for a parse error at a 1-based line/column position.
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
