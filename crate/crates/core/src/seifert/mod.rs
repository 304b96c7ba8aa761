//! Fractured Seifert data of simple fibred links: subspace decomposition of
//! the fiber homology, extraction of the fractured Seifert matrix from the
//! variation operator, the mended structure reconstructing the full fiber
//! data, validity checks, the analyticity (twist) test and plumbing-graph
//! invariants.

pub mod checks;
pub mod data;
pub mod decompose;
pub mod extract;
pub mod mend;
pub mod plumbing;
pub mod twist;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeifertError {
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
    #[error(transparent)]
    Hvs(#[from] crate::hvs::HvsError),
    #[error("fibration data violates the structure identities: {0}")]
    InvalidStructure(String),
    #[error("monodromy has a Jordan block of size {0} > 2 at eigenvalue 1 (link is not simple)")]
    NotSimple(usize),
    #[error("kernel of the intersection form meets the fixed space in dimension {got}, expected n - 1 = {expected}")]
    BoundaryDimension { got: usize, expected: usize },
    #[error("rank inconsistency: dim ker(Var) = {got} but the declared graph invariants give 2g + c = {expected}")]
    RankInconsistency { got: usize, expected: usize },
    #[error("variation operator does not induce a pairing on its image (invalid fibration data)")]
    VariationDescent,
    #[error("fractured Seifert matrix is degenerate")]
    DegenerateFractured,
    #[error("the image of the variation operator is not monodromy invariant")]
    NotInvariant,
    #[error("subspace decomposition constraints are unsatisfiable: {0}")]
    Decomposition(String),
    #[error("unit-eigenvalue part of the fractured structure is not of boundary/image shape: {0}")]
    UnitShape(String),
    #[error("declared component count/cycle count mismatch: {0}")]
    CountMismatch(String),
    #[error("monodromy eigenvalues are not all roots of unity")]
    NonRootOfUnity,
    #[error("linking numbers must be positive off the diagonal (link is not special)")]
    NotSpecial,
    #[error("plumbing graph is disconnected")]
    Disconnected,
    #[error("plumbing graph index out of range: {0}")]
    BadGraphIndex(usize),
}

pub type Result<T> = std::result::Result<T, SeifertError>;
