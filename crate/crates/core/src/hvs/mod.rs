//! Hermitian variation structures.

pub mod blocks;
pub mod jordan;
pub mod realize;
pub mod signature;
pub mod spectrum;
pub mod structure;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HvsError {
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("sign must be 1 or -1, got {0}")]
    BadSign(i64),
    #[error("direct summands must share the same epsilon")]
    EpsilonMismatch,
    #[error("partition must list every index exactly once")]
    BadPartition,
    #[error("b and h are not block-diagonal for the given partition")]
    NotBlockDiagonal,
    #[error("the form restricted to the first part is degenerate")]
    DegenerateFirstBlock,
    #[error("V is not block-diagonal although b and h split with nondegenerate first block; the input violates the structure identities")]
    SplitContradiction,
    #[error("unsupported angle {0}: the literal model blocks stay in Q(i) only for quarter-turn angles (use realize_blocks instead)")]
    UnsupportedAngle(String),
    #[error("off-circle block parameter must satisfy 0 < |lambda| < 1")]
    BadOffCircleParameter,
    #[error("model block construction produced an inconsistent system (calibration bug): {0}")]
    ModelBlock(String),
    #[error("monodromy is singular")]
    SingularMonodromy,
    #[error("spectrum entries must lie in (0, 2]")]
    SpectrumRange,
    #[error("off-circle blocks are not allowed here")]
    OffCircleBlocksPresent,
    #[error("structure must be defined over Q (no imaginary entries) for signature evaluation")]
    NotRational,
    #[error("structure is not simple (V is singular)")]
    NotSimple,
    #[error("monodromy has unit-circle eigenvalues that are not roots of unity")]
    NonRootOfUnityEigenvalues,
    #[error("axiom validation failed: {0}")]
    InvalidStructure(String),
    #[error("no nondegenerate invariant form found (unexpected for supported inputs)")]
    NoInvariantForm,
    #[error("signature data is inconsistent with the requested integral multiplicities")]
    InconsistentSignatureData(String),
    #[error("gap sample produced a singular twisted form; eigenvalue data is inconsistent")]
    UnexpectedNullity,
}

pub type Result<T> = std::result::Result<T, HvsError>;
