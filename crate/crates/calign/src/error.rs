use thiserror::Error;

/// Errors produced by parsing, solvers, and detectors.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed instance or alignment text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An input exceeded a configured resource limit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The exact solver ran out of search nodes; `best` holds the largest
    /// independent set found before giving up.
    #[error("search budget exhausted after {nodes} nodes (best so far: {} vertices)", best.len())]
    BudgetExceeded { nodes: u64, best: Vec<usize> },

    /// A structural theorem about conflict graphs was falsified on a concrete
    /// instance. This always indicates a bug and carries the witness.
    #[error("structural violation: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
