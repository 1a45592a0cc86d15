use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unrepresentable class: {0}")]
    Unrepresentable(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: char, right: char },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("guard exceeded: {what} needs {count} candidates, limit is {limit}")]
    GuardExceeded {
        what: String,
        count: u128,
        limit: u128,
    },

    #[error("bounds violated: {0}")]
    Bounds(String),

    #[error("not a shift module: {0}")]
    NotAShiftModule(String),

    #[error("module is not rear torsion-free: {0}")]
    NotRearTorsionFree(String),

    #[error("presentation is not minimal: {0}")]
    NonMinimalPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
