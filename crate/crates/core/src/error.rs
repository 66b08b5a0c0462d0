use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("q^(1/2) is irrational at q = {0}")]
    IrrationalSqrt(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index sets have different sizes")]
    MinorSize,
    #[error("invalid pseudo-index (m={m}, s={s}, r={r}, l={l}, t={t})")]
    PseudoIndex { m: i64, s: i64, r: i64, l: i64, t: i64 },
    #[error("unsupported evaluation: {0}")]
    Unsupported(String),
    #[error("size guard: {0} (use the feasibility override to force)")]
    Feasibility(String),
    #[error("linear system is rank deficient (nullity {0})")]
    RankDeficient(usize),
    #[error("nonzero residual on {0} rows")]
    Residual(usize),
    #[error("weights differ")]
    WeightMismatch,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight space is empty")]
    EmptyWeightSpace,
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("singular leading minor at position {0}")]
    SingularMinor(usize),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
