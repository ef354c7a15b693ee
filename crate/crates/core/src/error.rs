use thiserror::Error;

use crate::hypergraph::Vertex;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex set is not a valid r-set over the requested ground set.
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    /// A rank was outside [0, C(n,r)).
    #[error("rank {index} out of range, expected < {limit}")]
    RankOutOfRange { index: u64, limit: u64 },

    /// An operation was called with the same vertex twice where a pair was
    /// expected.
    #[error("vertices must be distinct, got {0} twice")]
    DegeneratePair(Vertex),

    /// A formula or construction is not defined for the given parameters.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// Parameters fall outside the range where a statement gives a value.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The loose 4-cycle Turán formula contains a symbol the source never
    /// defines; callers must pass it explicitly.
    #[error("unresolved symbol: {0}")]
    UnresolvedSymbol(String),

    /// A stated precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The rainbow extension found no qualifying edge through a big pair.
    #[error("rainbow extension stuck at big pair {{{u}, {v}}}: no edge avoids the used vertices and colors")]
    ExtensionStuck { u: Vertex, v: Vertex },

    /// An exact oracle refused an instance above its configured limit.
    #[error("instance over exact-mode limit: {0}")]
    OverLimit(String),

    /// File parsing failed; line numbers are 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
