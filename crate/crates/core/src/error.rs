use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight coordinates mix integer and half-integer entries: {0}")]
    MixedParity(String),

    #[error("weight coordinate {0} is neither an integer nor a half-integer")]
    NotHalfInteger(String),

    #[error("malformed weight `{0}`: expected five comma-separated rationals")]
    MalformedWeight(String),

    #[error("weight {weight} is not {flavor}-dominant")]
    NotDominant { weight: String, flavor: &'static str },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("section codimension {0} is outside 1..=9")]
    CodimOutOfRange(u32),

    #[error("ring model mismatch: expected {expected}, found {found}")]
    ModelMismatch { expected: String, found: String },

    #[error("splice problem is malformed: {0}")]
    SpliceShape(String),

    #[error("known terms are inconsistent with an exact sequence: {0}")]
    SpliceInconsistent(String),

    #[error("ansatz is underdetermined: {0}")]
    Underdetermined(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("malformed class: {0}")]
    MalformedClass(String),
}
