use thiserror::Error;

/// Errors raised by the series engine, the sequence families and the
/// identity machinery built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("composition requires an inner series without constant term")]
    ComposeWithUnit,
    #[error("series is not a delta series (order 1 with nonzero t-coefficient)")]
    NotDelta,
    #[error("series is not invertible (zero constant term)")]
    NotInvertible,
    #[error("truncation order {have} is too short; need at least {needed}")]
    TruncationTooShort { needed: usize, have: usize },
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("lambda must differ from 1")]
    LambdaUnit,
    #[error("multinomial parts sum to {parts}, expected {total}")]
    MultinomialMismatch { total: usize, parts: usize },
    #[error("this expansion requires r >= 1")]
    RequiresPositiveR,
    #[error("parameter outside the identity's domain: {0}")]
    ParamDomain(String),
    #[error("invalid rational literal {0:?}; expected \"p\" or \"p/q\"")]
    ParseRational(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
