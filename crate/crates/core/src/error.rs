use thiserror::Error;

/// Largest supported graph order; vertex sets are packed into one `u64`.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph order {0} exceeds the supported limit")]
    SizeLimit(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("search aborted after {0} nodes")]
    NodeLimitExceeded(u64),
    #[error("no legal move")]
    NoLegalMove,
    #[error("inconsistent game values: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
