use thiserror::Error;

/// Errors produced by graph construction and the triangle algorithms.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("adjacency matrix for {n} vertices exceeds the budget of {budget} vertices (use chiba_nishizeki or raise the matrix budget)")]
    MatrixTooLarge { n: usize, budget: usize },

    #[error("algorithm requires an adjacency matrix; build it first")]
    MatrixMissing,

    #[error("clique size {0} outside the supported range 3..=8")]
    EllOutOfRange(usize),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("invalid probability {0}")]
    InvalidProbability(f64),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
