use thiserror::Error;

use crate::graph6::Graph6Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph would have {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid symmetric family: {0}")]
    InvalidFamily(String),
    #[error("invalid shape certificate: {0}")]
    InvalidCertificate(String),
    #[error("expression error at byte {pos}: {msg}")]
    Expr { pos: usize, msg: String },
    #[error("unknown pattern: {0}")]
    UnknownPattern(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
