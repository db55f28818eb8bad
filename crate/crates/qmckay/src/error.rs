use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("substitution by zero")]
    ZeroSubstitution,
    #[error("half-integer exponent present but no square root designated")]
    MissingSquareRoot,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("table mismatch")]
    TableMismatch,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("mode {0} outside window")]
    ModeOutOfWindow(i64),
}
