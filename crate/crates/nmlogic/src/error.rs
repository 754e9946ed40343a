//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("function `{name}` expects {expected} argument(s), got {got}")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("proposition `{0}` is not bound by the assignment")]
    UnboundProposition(String),

    #[error("invalid truth table for `{name}`: expected {expected} bits, got {got}")]
    BadTable {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid relation `{name}`: {message}")]
    BadRelation { name: String, message: String },

    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("belief subformula `{0}` does not occur in the theory")]
    UnknownBeliefAtom(String),

    #[error("input is not in 3CNF: {0}")]
    NotCnf3(String),

    #[error("matrix is not in negation normal form: {0}")]
    NotNnf(String),

    #[error("malformed quantifier prefix: {0}")]
    MalformedPrefix(String),

    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),

    #[error("no classification is recorded for {problem} over {fragment} fragments")]
    NoClassification {
        problem: String,
        fragment: &'static str,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
