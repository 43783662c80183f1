use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("linear form is identically zero")]
    ZeroForm,

    #[error("arrangement has proportional forms; reduce it first")]
    NotReduced,

    #[error("arrangement is not essential (rank {rank} < {nvars} variables)")]
    NotEssential { rank: usize, nvars: usize },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Attaches a line number to a parse error.
    pub fn at_line(self, line: usize) -> Error {
        match self {
            Error::Parse { col, msg, .. } => Error::Parse { line, col, msg },
            Error::ZeroForm => Error::Parse { line, col: 1, msg: "linear form is identically zero".into() },
            other => other,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
