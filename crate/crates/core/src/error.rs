use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6: invalid character {0:?}")]
    Graph6InvalidChar(char),
    #[error("graph6: truncated payload (expected {expected} bytes, found {found})")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: trailing data after payload")]
    Graph6Trailing,
    #[error("graph6: unsupported order encoding")]
    Graph6UnsupportedOrder,
    #[error("order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown bound id {0:?}")]
    UnknownBound(String),
    #[error("rejection sampling gave up after {0} attempts")]
    RejectionCapExceeded(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
