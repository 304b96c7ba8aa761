//! Exact arithmetic over `Q` and `Q(i)`, dense matrices and the certified
//! primitives built on them.

pub mod circle;
pub mod cyclotomic;
pub mod gaussian;
pub mod inertia;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod rational;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not hermitian")]
    NonHermitian,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix has non-rational (imaginary) entries")]
    NonRational,
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("point is not on the unit circle")]
    OffCircle,
    #[error("evaluation point z = 1 is excluded")]
    UnitEvaluationPoint,
    #[error("empty arc: the two angles do not bound an open arc")]
    EmptyArc,
    #[error("iteration limit exceeded in {0}")]
    IterationLimit(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial division by zero polynomial")]
    ZeroPolynomialDivision,
}

pub type Result<T> = std::result::Result<T, ExactError>;
