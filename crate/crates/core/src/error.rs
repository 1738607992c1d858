use thiserror::Error;

use crate::lattice::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that cannot even be interpreted as a relation plus an
    /// orthocomplement map (wrong lengths, ortho not a permutation, ...).
    #[error("malformed lattice: {0}")]
    Structure(String),

    /// Well-formed input that fails one of the OML axioms.
    #[error("not an orthomodular lattice: {}", .0.summary())]
    Axioms(ValidationReport),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
