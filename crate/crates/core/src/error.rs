use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid signed permutation: {0}")]
    InvalidSigned(String),

    #[error("position {pos} out of range 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("block index {l} out of range 2..={r}")]
    BlockOutOfRange { l: usize, r: usize },

    #[error("permutation {perm} is not {eta}-admissible")]
    NotAdmissible { perm: String, eta: String },

    #[error("signed permutation {0} has an odd number of negative entries")]
    OddSigned(String),

    #[error("row {j0} does not satisfy (j0, sigma(j0)) in [>]")]
    RowNotInSucc { j0: usize },

    #[error("domain of size {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation point is a pole of the denominator")]
    Pole,

    #[error("statistic pair {pair} is not defined on domain {domain}")]
    PairNotOnDomain { pair: String, domain: String },

    #[error("internal identity violated: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
