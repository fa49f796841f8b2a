use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("parse error at position {pos}: `{name}` is not a ring generator")]
    UndeclaredGenerator { pos: usize, name: String },

    #[error("parse error at position {pos}: exponent must be a positive integer")]
    NonPositiveExponent { pos: usize },

    #[error("invalid ring declaration: {0}")]
    RingDeclaration(String),

    #[error("operands belong to different coefficient rings")]
    RingMismatch,

    #[error("generator `{0}` cannot be mapped into the target ring")]
    NotEmbeddable(String),

    #[error("index {index} exceeds the truncation bound {bound} of the free module")]
    TruncationOverflow { index: u32, bound: u32 },

    #[error("invalid index tuple: {0}")]
    InvalidIndex(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    BoxViolation {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("k = {k} is out of range for n = {n}")]
    KOutOfRange { k: usize, n: u32 },

    #[error("invalid module polynomial: {0}")]
    InvalidModule(String),

    #[error("operands live in different Grassmannian contexts")]
    ContextMismatch,

    #[error("operation requires a finite-rank module (p != 0)")]
    RequiresFiniteRank,
}

impl Error {
    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed user input rather than by a
    /// computation that could not be completed.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::TruncationOverflow { .. } | Error::RingMismatch | Error::ContextMismatch
        )
    }
}
