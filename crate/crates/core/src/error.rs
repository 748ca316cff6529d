use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be odd and at least 3, got {0}")]
    BadOrder(u32),
    #[error("operands belong to different coefficient fields")]
    ModeMismatch,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("[{0}]! vanishes at this root of unity")]
    QFactorialZeroDivision(u32),
    #[error("root index {0} is not coprime to p")]
    BadRootIndex(u32),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("pairing is only defined on polynomial z-parts")]
    NonPolynomialZPart,
    #[error("element has a nontrivial z-part")]
    NonTrivialZPart,
    #[error("not available in generic mode: {0}")]
    GenericModeUnsupported(&'static str),
    #[error("outside the allowed domain: {0}")]
    DomainViolation(String),
    #[error("negative power of a nilpotent generator")]
    NegativePowerOfNilpotent,
    #[error("nonzero frequency combined with polynomial degree")]
    UnsupportedMixedTerm,
    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),
    #[error("forms disagree: {0}")]
    FormMismatch(String),
    #[error("degenerate Gram matrix")]
    DegenerateGram,
}

pub type Result<T> = std::result::Result<T, Error>;
