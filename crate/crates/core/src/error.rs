use thiserror::Error;

/// Errors reported by the graph primitives and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: out-of-range vertex ids, disconnected sets where
    /// connected ones are required, empty sequences.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The instance is well-formed but inconsistent (e.g. a configuration
    /// outside the requested state space).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    /// The graph does not belong to the class a solver requires.
    #[error("wrong graph class: {0}")]
    WrongGraphClass(String),
    /// The configurations have a shape the solver does not handle.
    #[error("wrong instance shape: {0}")]
    WrongInstanceShape(String),
    /// A structural guarantee of cographs failed during solving.
    #[error("input is not a cograph: {0}")]
    NotACograph(String),
    /// The state space exceeds the configured cap.
    #[error("state space too large: more than {cap} states")]
    SpaceTooLarge { cap: usize },
    /// A certificate that must hold for valid input did not hold.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    /// Text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
