use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("unsupported format: {0}")]
    Format(String),

    /// A parameter lies outside the interval where the quantity is defined.
    #[error("{0}")]
    Domain(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    Convergence {
        iterations: usize,
        residual: f64,
        best: Vec<f64>,
    },

    #[error("series truncation failed after {terms} terms (last relative term {bound:e})")]
    Truncation { terms: usize, bound: f64 },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error(
        "graph has {n} nodes, above the dense limit of {limit}; use total communicability instead"
    )]
    Capacity { n: usize, limit: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is not {0}")]
    Disconnected(&'static str),

    #[error("rankings are not over the same node set: {0}")]
    Mismatch(String),

    #[error("result is not finite (overflow); reduce the parameter")]
    Overflow,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
