use thiserror::Error;

use crate::poly::{MonomialOrder, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("operands use different monomial orders ({left} vs {right})")]
    OrderMismatch { left: MonomialOrder, right: MonomialOrder },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("zero denominator at {line}:{column}")]
    ZeroDenominator { line: usize, column: usize },
    #[error("malformed variable `{text}` at {line}:{column}")]
    MalformedVariable { line: usize, column: usize, text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("level-0 variable in `{0}`: the order is not global there")]
    LevelZeroVariable(String),
    #[error("generator `{0}` is not weight-homogeneous")]
    NotHomogeneous(String),
    #[error("generator `{0}` has weight 0")]
    WeightZero(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("basis cache: {0}")]
    Cache(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("geometric factor exponent must be at least 1")]
    ZeroFactor,
    #[error("variable {0} has weight 0")]
    WeightZeroVariable(VarId),
    #[error("malformed series: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("enumeration of partitions of {m} exceeds the limit {limit}")]
    TooLarge { m: usize, limit: usize },
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("invalid ideal spec: {0}")]
    Invalid(String),
    #[error("generator `{0}` does not vanish at the origin")]
    NotThroughOrigin(String),
    #[error("truncation {requested} exceeds the weight bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("invalid closed form: {0}")]
    InvalidKind(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
