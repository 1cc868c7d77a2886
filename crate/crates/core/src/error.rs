use thiserror::Error;

/// Errors raised by graph construction, parsing, colouring and the solver.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid json graph: {0}")]
    Json(String),

    #[error("colouring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("colouring is not proper: {0} bad edge(s)")]
    ImproperColouring(usize),

    #[error("colouring uses {found} classes, chromatic number is {expected}")]
    WrongClassCount { expected: usize, found: usize },

    #[error("instance of order {order} exceeds the guard of {limit}")]
    GuardExceeded { order: usize, limit: usize },

    #[error("search timed out before any chromatic colouring was found")]
    Timeout,

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
