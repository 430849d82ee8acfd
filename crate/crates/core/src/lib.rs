//! Exact arithmetic in the `C2`-equivariant ordinary cohomology of complex projective spaces
//! `X(p,q)`, with Burnside ring, constant `Z` and Borel coefficients, and Euler classes of sums of
//! line bundles.

pub mod grading;
pub mod euler;
pub mod hscalar;
pub mod projmod;
pub mod scalar;
pub mod variants;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("grading mismatch: {0} vs {1}")]
    GradingMismatch(String, String),
    #[error(transparent)]
    Grading(#[from] grading::GradingError),
    #[error("p+q must be positive")]
    EmptySpace,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a basis monomial of {1}")]
    NotBasis(String, String),
    #[error("unsupported product: both factors contain divided monomials")]
    UnsupportedProduct,
    #[error("bundle sum violates the Bezout context: {0}")]
    Context(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
