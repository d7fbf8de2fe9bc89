use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the constructions built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no decomposition")]
    ZeroPolynomial,
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("modulus not irreducible")]
    ModulusNotIrreducible,
    #[error("node count out of range [0, g]")]
    NodeCountOutOfRange,
    #[error("genus out of range: {0}")]
    GenusOutOfRange(String),
    #[error("degenerate model: degree drop")]
    DegreeDrop,
    #[error("singular cubic has no j-invariant")]
    SingularCubic,
    #[error("pencil is non-constant precondition violated")]
    ProportionalPencil,
    #[error("pencil is everywhere-singular")]
    EverywhereSingular,
    #[error("adjunction formula requires a,b >= 1")]
    AdjunctionRange,
    #[error("non-effective or malformed class")]
    MalformedClass,
    #[error("Hirzebruch classes live on different surfaces (F_{0} vs F_{1})")]
    SurfaceMismatch(u64, u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("non-integral completion: {0}")]
    NonIntegral(String),
    #[error("malformed literal: {0}")]
    Literal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
