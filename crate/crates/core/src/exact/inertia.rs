//! Exact inertia of hermitian matrices.
//!
//! A hermitian `H = A + iB` over `Q(i)` is realified to the real symmetric
//! `R = [[A, -B], [B, A]]`, whose inertia is exactly twice that of `H`.
//! The real symmetric case is handled by exact congruence diagonalisation
//! (Lagrange reduction; when every active diagonal entry vanishes, a
//! symmetric row/column addition creates a nonzero pivot).

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::rational::Rational;
use super::{ExactError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_negative_semidefinite(&self) -> bool {
        self.n_plus == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 0
    }
}

/// Congruence diagonalisation of a real symmetric rational matrix.
///
/// Returns `(diag, basis)` with `basis^t * M * basis` the diagonal matrix
/// with the returned entries, exactly.
pub fn congruence_diagonalize(m: &Matrix) -> Result<(Vec<Rational>, Matrix)> {
    if !m.is_square() {
        return Err(ExactError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_rational() {
        return Err(ExactError::NonRational);
    }
    if !m.is_symmetric() {
        return Err(ExactError::NonSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Rational> = m.rational_entries()?;
    let mut basis = Matrix::identity(n);
    let mut active: Vec<usize> = (0..n).collect();
    let mut diag = vec![Rational::zero(); n];
    let idx = |r: usize, c: usize| r * n + c;

    while !active.is_empty() {
        // prefer a nonzero diagonal pivot
        if let Some(pos) = active.iter().position(|&i| !a[idx(i, i)].is_zero()) {
            let i = active.remove(pos);
            let d = a[idx(i, i)].clone();
            diag[i] = d.clone();
            // snapshot the pivot column before touching anything
            let col: Vec<(usize, Rational)> =
                active.iter().map(|&j| (j, a[idx(j, i)].clone())).collect();
            // basis: col_j -= (v_j / d) col_i
            for (j, vj) in &col {
                let f = vj / &d;
                if f.is_zero() {
                    continue;
                }
                let fz = crate::exact::gaussian::GaussianRational::from_rational(f);
                for r in 0..n {
                    let v = basis.at(r, *j) - &(&fz * basis.at(r, i));
                    *basis.at_mut(r, *j) = v;
                }
            }
            // Schur complement on the active block: a_jk -= v_j v_k / d
            for (j, vj) in &col {
                if vj.is_zero() {
                    continue;
                }
                for (k, vk) in &col {
                    if vk.is_zero() {
                        continue;
                    }
                    let v = &a[idx(*j, *k)] - &(&(vj * vk) / &d);
                    a[idx(*j, *k)] = v;
                }
                a[idx(*j, i)] = Rational::zero();
                a[idx(i, *j)] = Rational::zero();
            }
            continue;
        }
        // all active diagonals vanish; look for an off-diagonal entry
        let mut found = None;
        'outer: for (pi, &i) in active.iter().enumerate() {
            for &j in &active[pi + 1..] {
                if !a[idx(i, j)].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        match found {
            None => {
                for &i in &active {
                    diag[i] = Rational::zero();
                }
                active.clear();
            }
            Some((i, j)) => {
                // row_i += row_j ; col_i += col_j makes a(ii) = 2 a(ij) != 0
                for k in 0..n {
                    let v = &a[idx(i, k)] + &a[idx(j, k)];
                    a[idx(i, k)] = v;
                }
                for k in 0..n {
                    let v = &a[idx(k, i)] + &a[idx(k, j)];
                    a[idx(k, i)] = v;
                }
                for r in 0..n {
                    let v = basis.at(r, i) + basis.at(r, j);
                    *basis.at_mut(r, i) = v;
                }
            }
        }
    }
    Ok((diag, basis))
}

/// Exact inertia of a real symmetric rational matrix.
pub fn symmetric_inertia(m: &Matrix) -> Result<Inertia> {
    let (diag, _) = congruence_diagonalize(m)?;
    Ok(tally(&diag))
}

fn tally(diag: &[Rational]) -> Inertia {
    let mut out = Inertia { n_plus: 0, n_minus: 0, n_zero: 0 };
    for d in diag {
        match crate::exact::rational::sign_of(d) {
            1 => out.n_plus += 1,
            -1 => out.n_minus += 1,
            _ => out.n_zero += 1,
        }
    }
    out
}

/// Exact inertia of a hermitian matrix over `Q(i)`, via realification.
pub fn hermitian_inertia(h: &Matrix) -> Result<Inertia> {
    if !h.is_square() {
        return Err(ExactError::NonSquare { rows: h.rows(), cols: h.cols() });
    }
    if !h.is_hermitian() {
        return Err(ExactError::NonHermitian);
    }
    let doubled = symmetric_inertia(&h.realify())?;
    if doubled.n_plus % 2 != 0 || doubled.n_minus % 2 != 0 || doubled.n_zero % 2 != 0 {
        // realification doubles the inertia componentwise; odd counts would
        // contradict exactness
        return Err(ExactError::DimensionMismatch("realified inertia has odd counts".into()));
    }
    Ok(Inertia {
        n_plus: doubled.n_plus / 2,
        n_minus: doubled.n_minus / 2,
        n_zero: doubled.n_zero / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gaussian::GaussianRational;
    use crate::exact::rational::rat_int;

    #[test]
    fn diagonal_example() {
        let m = Matrix::from_int_rows(&[&[2, 0], &[0, -3]]);
        assert_eq!(hermitian_inertia(&m).unwrap(), Inertia { n_plus: 1, n_minus: 1, n_zero: 0 });
    }

    #[test]
    fn off_diagonal_hermitian() {
        // [[0, i], [-i, 0]] has eigenvalues +-1
        let i = GaussianRational::i();
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::zero(), i.clone()],
            vec![-&i, GaussianRational::zero()],
        ]);
        assert_eq!(hermitian_inertia(&m).unwrap(), Inertia { n_plus: 1, n_minus: 1, n_zero: 0 });
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(
            hermitian_inertia(&Matrix::zero(2, 2)).unwrap(),
            Inertia { n_plus: 0, n_minus: 0, n_zero: 2 }
        );
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[2, 0]]);
        assert!(matches!(hermitian_inertia(&m), Err(ExactError::NonHermitian)));
    }

    #[test]
    fn realification_doubles() {
        let i = GaussianRational::i();
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::from_int(1), i.clone()],
            vec![-&i, GaussianRational::from_int(-2)],
        ]);
        let single = hermitian_inertia(&m).unwrap();
        let doubled = symmetric_inertia(&m.realify()).unwrap();
        assert_eq!(doubled.n_plus, 2 * single.n_plus);
        assert_eq!(doubled.n_minus, 2 * single.n_minus);
        assert_eq!(doubled.n_zero, 2 * single.n_zero);
    }

    #[test]
    fn congruence_transform_is_exact() {
        let m = Matrix::from_int_rows(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        let (diag, basis) = congruence_diagonalize(&m).unwrap();
        let d = &(&basis.transpose() * &m) * &basis;
        for r in 0..3 {
            for c in 0..3 {
                let expect = if r == c { diag[r].clone() } else { rat_int(0) };
                assert_eq!(d.at(r, c).re, expect);
                assert!(d.at(r, c).im.is_zero());
            }
        }
    }
}
