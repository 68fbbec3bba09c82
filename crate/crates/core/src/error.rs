use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution makes the denominator vanish")]
    SubstitutionPole,
    #[error("evaluation makes the denominator vanish")]
    EvaluationPole,
    #[error("unsupported root system: {0}")]
    UnsupportedSpec(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("wrong type: {0}")]
    WrongType(String),
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),
    #[error("operation requires {0} mode")]
    WrongMode(String),
    #[error("leading coefficient is not invertible")]
    SingularLeadingTerm,
    #[error("elements are not comparable: {0}")]
    NotComparable(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
