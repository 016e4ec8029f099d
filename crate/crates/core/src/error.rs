use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("coefficient mode mismatch")]
    ModeMismatch,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("bad divisor: {0}")]
    BadDivisor(String),
    #[error("negative exponent in polynomial (additive) mode")]
    NegativeExponent,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("root datum mismatch between operands")]
    DatumMismatch,
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(i64),
    #[error("element is not affine Grassmannian: {0}")]
    NotGrassmannian(String),
    #[error("partition is not {0}-bounded")]
    NotBounded(usize),
    #[error("operation requires a type A root datum")]
    NotTypeA,
    #[error("automorphism must fix the affine node 0")]
    MovesZero,
    #[error("residual of a basis expansion has Grassmannian support: {0}")]
    GrassmannianResidual(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
