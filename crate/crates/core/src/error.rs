use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Dyck code at byte {position}: {reason}")]
    MalformedCode { position: usize, reason: &'static str },

    #[error("{what} = {requested} exceeds the configured limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("graph contains a cycle (edge {edge} closes it); a flow with one sink has a tree as its invariant")]
    HasCycle { edge: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid flow graph: {0}")]
    InvalidGraph(String),

    #[error("malformed plane tree serialization: {0}")]
    MalformedPlaneTree(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
