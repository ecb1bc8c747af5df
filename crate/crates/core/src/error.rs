use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no edges; its value is undefined")]
    EmptyEdges,

    #[error("assignment covers {got} vertices but the graph has {expected}")]
    AssignmentSize { expected: usize, got: usize },

    #[error("graph has {n} vertices, above the enumeration limit of {limit}")]
    VertexLimit { n: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error(
        "relaxation solver did not converge after {restarts} restarts \
         (best violation {best_violation:.3e}, objective {best_objective:.9})"
    )]
    NonConvergence {
        restarts: usize,
        best_violation: f64,
        best_objective: f64,
    },

    #[error("invalid configuration triple ({x}, {y}, {z}): {reason}")]
    InvalidTriple {
        x: f64,
        y: f64,
        z: f64,
        reason: &'static str,
    },

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
