use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different ring contexts")]
    ContextMismatch,

    #[error("exponent length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),

    #[error("quotient is not Artinian below degree ceiling {ceiling}")]
    UnboundedQuotient { ceiling: u32 },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("no regular linear form found after {trials} trials")]
    SearchExhausted { trials: usize },

    #[error("pipeline rejected input: {0}")]
    Pipeline(String),

    #[error("inconsistent data: {0}")]
    Inconsistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for malformed input (as opposed to a mathematical rejection).
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
