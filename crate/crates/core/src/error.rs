use thiserror::Error;

/// Errors raised by the combinatorial and sampling routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} at position {position} is outside the alphabet 1..={alphabet}")]
    LetterOutOfRange {
        letter: u32,
        position: usize,
        alphabet: u32,
    },
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<u32>),
    #[error("parts {0:?} do not form a partition")]
    InvalidDiagram(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("cell ({row}, {col}) is not a corner")]
    NotACorner { row: usize, col: usize },
    #[error("{from:?} -> {to:?} is not a covering relation in Young's lattice")]
    NotCovering { from: Vec<usize>, to: Vec<usize> },
    #[error("shape {shape:?} has {size} boxes, expected {expected}")]
    SizeMismatch {
        shape: Vec<usize>,
        size: usize,
        expected: usize,
    },
    #[error("exact enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("hook-content product for {0:?} is not an integer")]
    NonIntegral(Vec<usize>),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("switch sequence is not viable for p = {p}, q = {q}")]
    NotViable { p: u32, q: u32 },
    #[error("switch sequence produced the null tableau")]
    NullInfusion,
    #[error("pair is not in the image of Hecke insertion: {0}")]
    NotInImage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
