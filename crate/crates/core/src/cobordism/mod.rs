//! Murasugi-type signature bounds for Seifert cobordisms, irregularity
//! bookkeeping and the spectrum-semicontinuity checkers for deformation
//! scenarios.

pub mod semicontinuity;

use serde::{Deserialize, Serialize};

use crate::exact::rational::{rat_int, Rational};

/// Dimension data of a Seifert cobordism entering the signature bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismInvariants {
    pub dim_u0: usize,
    pub dim_u1: usize,
    pub b1_sigma0: usize,
    pub b1_sigma1: usize,
    /// First Betti number of the glued surface between the two ends.
    pub b1_glued: usize,
    pub irr2: usize,
    /// Dimension of the kernel of the map from the boundary first homology
    /// into the cobordism.
    pub ker_h1: usize,
}

/// Lower bound for the dimension of the null space of the Seifert form
/// carried by a one-sided cobordism: `b1(Sigma) - b1(glued)/2 - irr2 - ker`.
/// May be non-positive, in which case the bound is vacuous. Exact rational
/// output (the half need not clear).
pub fn null_space_bound(b1_sigma: usize, b1_glued: usize, irr2: usize, ker_a: usize) -> Rational {
    rat_int(b1_sigma as i64)
        - rat_int(b1_glued as i64) / rat_int(2)
        - rat_int(irr2 as i64)
        - rat_int(ker_a as i64)
}

/// `|sigma(z)| <= dim U - 2 dim U_null + n(z)`, evaluated exactly. Errors
/// if the null space exceeds the total space.
pub fn lagrange_bound(dim_u: usize, dim_null: usize, nullity: usize) -> Result<i64, String> {
    if dim_null > dim_u {
        return Err(format!("null space dimension {dim_null} exceeds dim U = {dim_u}"));
    }
    Ok(dim_u as i64 - 2 * dim_null as i64 + nullity as i64)
}

#[derive(Clone, Debug, Serialize)]
pub struct MurasugiReport {
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub pass: bool,
}

/// The signature jump bound across a Seifert cobordism:
/// `|sigma0 - sigma1| <= dimU0 + dimU1 - 2 b1(S0) - 2 b1(S1) + b1(glued)
///  + 2 irr2 + 2 ker + n0 + n1`.
pub fn murasugi_check(
    sig0: i64,
    sig1: i64,
    null0: usize,
    null1: usize,
    ci: &CobordismInvariants,
) -> MurasugiReport {
    let lhs = (sig0 - sig1).abs();
    let rhs = ci.dim_u0 as i64 + ci.dim_u1 as i64
        - 2 * ci.b1_sigma0 as i64
        - 2 * ci.b1_sigma1 as i64
        + ci.b1_glued as i64
        + 2 * ci.irr2 as i64
        + 2 * ci.ker_h1 as i64
        + null0 as i64
        + null1 as i64;
    MurasugiReport { lhs, rhs, slack: rhs - lhs, pass: lhs <= rhs }
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrSumReport {
    pub value: i64,
    /// Negative totals cannot arise from actual cobordisms.
    pub consistent: bool,
}

/// `Irr1 + Irr2 = dim H2(W, M) - sum b1(M_i)`.
pub fn irr_sum(dim_h2_wm: usize, b1_mi: &[usize]) -> IrrSumReport {
    let value = dim_h2_wm as i64 - b1_mi.iter().map(|&x| x as i64).sum::<i64>();
    IrrSumReport { value, consistent: value >= 0 }
}

pub use semicontinuity::{
    semicontinuity_check, semicontinuity_mhs_check, CentralData, DeformationScenario,
    SatelliteData, SemicontReport, WindowKind, WindowVerdict,
};
