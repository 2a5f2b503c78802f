use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("unknown field `{0}` (expected `Q` or `Fp:<p>`)")]
    BadField(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("cannot parse polynomial `{text}`: {reason}")]
    BadPolynomial { text: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("value outside the domain: {0}")]
    Domain(String),
}

/// Errors raised while building or evaluating invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
