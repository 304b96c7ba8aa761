//! The quadruple `(U; b, h, V)` with a sign `epsilon`, its compatibility
//! identities, direct sums, the splitting lemma and changes of basis.
//!
//! Matrix conventions: printed matrices act on column vectors, dual maps
//! transpose, and the identities read
//!
//! ```text
//!   V b           = h - I
//!   conj(V)^t     = -eps V conj(h)^t
//!   conj(b)^t     =  eps b
//!   conj(h)^t b h =  b
//! ```
//!
//! This is the unique transpose/conjugate placement under which all the
//! model blocks and the indecomposable three-dimensional example validate
//! exactly; `blocks::tests::calibration_is_unique` pins it against the
//! alternatives.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::exact::matrix::Matrix;
use crate::hvs::{HvsError, Result};

/// A sign, serialised as the integer `1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(HvsError::BadSign(v)),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn scalar(self) -> crate::exact::gaussian::GaussianRational {
        crate::exact::gaussian::GaussianRational::from_int(self.as_i64())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.as_i64())
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v).map_err(serde::de::Error::custom)
    }
}

/// An `epsilon`-hermitian variation structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hvs {
    pub epsilon: Sign,
    pub b: Matrix,
    pub h: Matrix,
    pub v: Matrix,
}

impl Hvs {
    pub fn new(epsilon: Sign, b: Matrix, h: Matrix, v: Matrix) -> Self {
        Hvs { epsilon, b, h, v }
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    pub fn zero_dim(epsilon: Sign) -> Self {
        Hvs::new(epsilon, Matrix::zero(0, 0), Matrix::zero(0, 0), Matrix::zero(0, 0))
    }

    /// Simple: the variation operator is invertible.
    pub fn is_simple(&self) -> bool {
        self.v.rank() == self.dim()
    }

    /// Non-degenerate: the form is invertible.
    pub fn is_nondegenerate(&self) -> bool {
        self.b.rank() == self.dim()
    }

    /// All entries real, i.e. the structure is defined over `Q`.
    pub fn is_rational(&self) -> bool {
        self.b.is_rational() && self.h.is_rational() && self.v.is_rational()
    }
}

/// One violated identity, with the exact residual.
#[derive(Clone, Debug)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub residual: Option<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `V b - (h - I) = 0`
    VariationIdentity,
    /// `conj(V)^t + eps V conj(h)^t = 0`
    VariationSymmetry,
    /// `conj(b)^t - eps b = 0`
    HermitianForm,
    /// `conj(h)^t b h - b = 0`
    MonodromyPreservesForm,
    /// `h` must be invertible
    MonodromyInvertible,
}

impl Axiom {
    pub fn label(&self) -> &'static str {
        match self {
            Axiom::VariationIdentity => "V*b = h - I",
            Axiom::VariationSymmetry => "conj(V)^t = -eps*V*conj(h)^t",
            Axiom::HermitianForm => "conj(b)^t = eps*b",
            Axiom::MonodromyPreservesForm => "conj(h)^t*b*h = b",
            Axiom::MonodromyInvertible => "h invertible",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every identity exactly, reporting each failure with its residual.
pub fn validate_hvs(v: &Hvs) -> Result<ValidationReport> {
    let n = v.dim();
    for (name, m) in [("b", &v.b), ("h", &v.h), ("V", &v.v)] {
        if m.rows() != n || m.cols() != n {
            return Err(HvsError::DimensionMismatch(format!(
                "{name} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut report = ValidationReport::default();
    let eps = v.epsilon.scalar();

    let r1 = &(&v.v * &v.b) - &(&v.h - &Matrix::identity(n));
    if !r1.is_zero() {
        report.violations.push(AxiomViolation { axiom: Axiom::VariationIdentity, residual: Some(r1) });
    }
    let r2 = &v.v.conj_transpose() + &(&v.v * &v.h.conj_transpose()).scale(&eps);
    if !r2.is_zero() {
        report.violations.push(AxiomViolation { axiom: Axiom::VariationSymmetry, residual: Some(r2) });
    }
    let r3 = &v.b.conj_transpose() - &v.b.scale(&eps);
    if !r3.is_zero() {
        report.violations.push(AxiomViolation { axiom: Axiom::HermitianForm, residual: Some(r3) });
    }
    let r4 = &(&(&v.h.conj_transpose() * &v.b) * &v.h) - &v.b;
    if !r4.is_zero() {
        report
            .violations
            .push(AxiomViolation { axiom: Axiom::MonodromyPreservesForm, residual: Some(r4) });
    }
    if v.h.rank() != n {
        report.violations.push(AxiomViolation { axiom: Axiom::MonodromyInvertible, residual: None });
    }
    Ok(report)
}

/// Block-diagonal direct sum; the signs must agree.
pub fn direct_sum(a: &Hvs, b: &Hvs) -> Result<Hvs> {
    if a.epsilon != b.epsilon {
        return Err(HvsError::EpsilonMismatch);
    }
    Ok(Hvs::new(
        a.epsilon,
        Matrix::block_diag(&[&a.b, &b.b]),
        Matrix::block_diag(&[&a.h, &b.h]),
        Matrix::block_diag(&[&a.v, &b.v]),
    ))
}

/// Direct sum of many structures.
pub fn direct_sum_all(eps: Sign, parts: &[Hvs]) -> Result<Hvs> {
    let mut acc = Hvs::zero_dim(eps);
    for p in parts {
        acc = direct_sum(&acc, p)?;
    }
    Ok(acc)
}

/// Splitting along a partition on which `b` and `h` are block-diagonal with
/// `b` non-degenerate on the first part: the variation operator is then
/// forced to be block-diagonal too, and the two summands are returned.
///
/// A non-block-diagonal `V` under satisfied preconditions would contradict
/// the splitting property, so it is reported as a distinct error.
pub fn split_by_form(v: &Hvs, part1: &[usize], part2: &[usize]) -> Result<(Hvs, Hvs)> {
    let n = v.dim();
    let mut seen = vec![false; n];
    for &i in part1.iter().chain(part2) {
        if i >= n || seen[i] {
            return Err(HvsError::BadPartition);
        }
        seen[i] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(HvsError::BadPartition);
    }
    let take = |idx: &[usize]| {
        Hvs::new(
            v.epsilon,
            v.b.submatrix(idx, idx),
            v.h.submatrix(idx, idx),
            v.v.submatrix(idx, idx),
        )
    };
    // splitting off an empty part is trivial
    if part1.is_empty() || part2.is_empty() {
        return Ok((take(part1), take(part2)));
    }
    let cross_zero = |m: &Matrix| -> bool {
        part1.iter().all(|&i| part2.iter().all(|&j| m.at(i, j).is_zero() && m.at(j, i).is_zero()))
    };
    if !cross_zero(&v.b) || !cross_zero(&v.h) {
        return Err(HvsError::NotBlockDiagonal);
    }
    let b1 = v.b.submatrix(part1, part1);
    if b1.rank() != part1.len() {
        return Err(HvsError::DegenerateFirstBlock);
    }
    if !cross_zero(&v.v) {
        return Err(HvsError::SplitContradiction);
    }
    Ok((take(part1), take(part2)))
}

/// Change of basis: the columns of `c` are the new basis vectors in old
/// coordinates. Transforms as `b -> conj(c)^t b c`, `h -> c^{-1} h c`,
/// `V -> c^{-1} V (conj(c)^t)^{-1}`; every identity is preserved.
pub fn change_basis(v: &Hvs, c: &Matrix) -> Result<Hvs> {
    if !c.is_square() || c.rows() != v.dim() {
        return Err(HvsError::DimensionMismatch("basis matrix must be square of the same size".into()));
    }
    let c_inv = c.inverse().map_err(HvsError::Exact)?;
    let c_ct = c.conj_transpose();
    let c_ct_inv = c_ct.inverse().map_err(HvsError::Exact)?;
    Ok(Hvs::new(
        v.epsilon,
        &(&c_ct * &v.b) * c,
        &(&c_inv * &v.h) * c,
        &(&c_inv * &v.v) * &c_ct_inv,
    ))
}

/// The printed indecomposable three-dimensional structure; used by tests and
/// shipped as a fixture.
pub fn nonsplit_example() -> Hvs {
    Hvs::new(
        Sign::Minus,
        Matrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]),
        Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonsplit_passes_and_is_not_simple() {
        let v = nonsplit_example();
        let report = validate_hvs(&v).unwrap();
        assert!(report.pass(), "violations: {:?}", report.violations);
        assert!(!v.is_simple());
        assert_eq!(v.v.rank(), 2);
    }

    #[test]
    fn broken_axiom_reports_residual() {
        // b = I, h = I, V = I: V b = I != 0 = h - I
        let v = Hvs::new(Sign::Minus, Matrix::identity(1), Matrix::identity(1), Matrix::identity(1));
        let report = validate_hvs(&v).unwrap();
        assert!(!report.pass());
        assert!(report.violations.iter().any(|x| x.axiom == Axiom::VariationIdentity));
    }

    #[test]
    fn split_round_trip() {
        let a = Hvs::new(
            Sign::Minus,
            Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]),
            Matrix::identity(2),
            Matrix::zero(2, 2),
        );
        let b = nonsplit_example();
        let sum = direct_sum(&a, &b).unwrap();
        let (x, y) = split_by_form(&sum, &[0, 1], &[2, 3, 4]).unwrap();
        assert_eq!(x, a);
        assert_eq!(y, b);
        let (full, empty) = split_by_form(&sum, &[0, 1, 2, 3, 4], &[]).unwrap();
        assert_eq!(full, sum);
        assert_eq!(empty.dim(), 0);
    }

    #[test]
    fn nonsplit_rejects_bad_partition() {
        let v = nonsplit_example();
        let err = split_by_form(&v, &[0], &[1, 2]).unwrap_err();
        assert!(matches!(err, HvsError::NotBlockDiagonal | HvsError::DegenerateFirstBlock));
    }

    #[test]
    fn epsilon_mismatch_rejected() {
        let a = Hvs::zero_dim(Sign::Plus);
        let b = Hvs::zero_dim(Sign::Minus);
        assert!(matches!(direct_sum(&a, &b), Err(HvsError::EpsilonMismatch)));
    }

    #[test]
    fn change_basis_preserves_validity() {
        let v = nonsplit_example();
        let c = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let w = change_basis(&v, &c).unwrap();
        assert!(validate_hvs(&w).unwrap().pass());
        assert_eq!(w.v.rank(), 2);
    }
}
