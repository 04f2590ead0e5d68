use std::fmt;

/// Failure to read a word, term or table from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token in the input.
    pub offset: usize,
    pub token: String,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            offset,
            token: token.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at byte {}: `{}`",
            self.message, self.offset, self.token
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("x letter {letter} at position {position}: x letters are not invertible")]
    XLetterPresent { letter: String, position: usize },

    #[error("relation ({rule}) does not match at position {position}")]
    NoMatch { rule: u8, position: usize },

    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error(
        "letter {letter} at position {position} needs {needed} strands but only {available} remain"
    )]
    InvalidStrandIndex {
        letter: String,
        position: usize,
        needed: u32,
        available: u32,
    },

    #[error("rank mismatch: source rank {source_rank} does not match target rank {target_rank}")]
    RankMismatch { source_rank: u32, target_rank: u32 },

    #[error("invalid LD table: {0}")]
    InvalidTable(String),

    #[error("not left distributive: a={a}, b={b}, c={c} gives a·(b·c) != (a·b)·(a·c)")]
    NotLeftDistributive { a: u32, b: u32, c: u32 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
