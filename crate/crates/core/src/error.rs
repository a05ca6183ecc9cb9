use thiserror::Error;

/// Errors raised by the engine and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A finite directive does not determine the requested object.
    #[error("insufficient directive: {0}")]
    InsufficientDirective(String),

    /// The operation needs an eventually periodic directive.
    #[error("mode error: {0}")]
    Mode(String),

    /// Two surds over different quadratic fields were combined.
    #[error("incompatible radicands: sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(String, String),

    #[error("division by zero")]
    DivisionByZero,

    /// The statement backing the operation does not cover this input.
    #[error("outside the scope of the {theorem}: {detail}")]
    TheoremScope { theorem: &'static str, detail: String },

    /// A finite prefix is too short to certify the requested scan.
    #[error("truncation: {0}")]
    Truncation(String),

    /// Too few occurrences to observe the requested quantity.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// An invariant that the arithmetic guarantees was observed broken.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
