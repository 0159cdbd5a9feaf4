use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node {node} out of range for a graph with {n} nodes")]
    Bounds { node: usize, n: usize },

    #[error("{what} needs n <= {cap}, got n = {n}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("coefficient spec `{0}` cannot be evaluated exactly")]
    NotEvaluable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("degenerate constraint: node {0} cannot outrank itself")]
    DegenerateConstraint(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
