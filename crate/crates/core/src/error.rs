use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("axiom failure: {}", .0.summary())]
    Axioms(Report),

    #[error("degree does not belong to this lattice")]
    Ownership,

    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("enumeration of {needed} L-sets exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid interval: lower endpoint {lower} is not below upper endpoint {upper}")]
    InvalidInterval { lower: String, upper: String },

    #[error("ordered set violates its axioms: {0}")]
    CorruptedOrder(String),

    #[error("Galois pair is inconsistent: {0}")]
    CorruptedPair(String),

    #[error("ordered set is not completely lattice: {0}")]
    NotCompletelyLattice(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("relation is not a complete tolerance: {0}")]
    NotComplete(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::NotComplete(_)
            | Error::CorruptedOrder(_)
            | Error::CorruptedPair(_)
            | Error::NotCompletelyLattice(_) => 1,
            _ => 2,
        }
    }
}
