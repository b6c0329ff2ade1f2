use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("letter {letter} needs rank at least {}, but rank is {rank}", letter.unsigned_abs() + 1)]
    Rank { letter: i32, rank: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i32, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
