use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid monad data: {0}")]
    InvalidSpec(String),

    #[error("invalid split bundle: {0}")]
    InvalidBundle(String),

    #[error("split bundle degrees are not closed under negation")]
    NotSymplectic,

    #[error("bundles live on different projective spaces (P^{0} vs P^{1})")]
    AmbientMismatch(usize, usize),

    #[error("total Chern class must have leading coefficient 1")]
    NotUnital,

    #[error("outside the proven range: {0}")]
    OutsideHypothesis(String),

    #[error("degenerate parameters (a, b) = ({a}, {b})")]
    Degenerate { a: i64, b: i64 },

    #[error("no suitable M found up to the search ceiling {ceiling}")]
    SearchExhausted { ceiling: u64 },

    #[error("value out of supported range: {0}")]
    OutOfRange(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
