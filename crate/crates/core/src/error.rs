use thiserror::Error;

use crate::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("columns are not in lexicographic order at position {position}")]
    NotLexicographic { position: usize },

    #[error("letter {letter} is outside the alphabet 1..={m}")]
    LetterOutOfRange { letter: Letter, m: u32 },

    #[error("u-row and v-row have different lengths ({u} vs {v})")]
    RowLengthMismatch { u: usize, v: usize },

    #[error("parts are not a weakly decreasing list of positive integers: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("rows do not match shape {shape:?}")]
    RowsDoNotMatchShape { shape: Vec<u32> },

    #[error("tableau is not semistandard over 1..={m}")]
    NotSemistandard { m: u32 },

    #[error("tableau pair has different shapes ({p:?} vs {q:?})")]
    ShapeMismatch { p: Vec<u32>, q: Vec<u32> },

    #[error("tableau pair uses different alphabets ({p} vs {q})")]
    AlphabetMismatch { p: u32, q: u32 },

    #[error("matrix is not {m}x{m}")]
    MatrixNotSquare { m: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
