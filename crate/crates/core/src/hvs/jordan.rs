//! Jordan data of a rational invertible matrix, organised by cyclotomic
//! factors: for each order `d`, the block-size multiset at each primitive
//! d-th root of unity (the same at every such root, by rationality), derived
//! from exact ranks of powers of `Phi_d(h)`.

use std::collections::BTreeMap;

use crate::exact::cyclotomic::{cyclotomic, cyclotomic_split, euler_phi};
use crate::exact::matrix::Matrix;
use crate::exact::poly::RatPoly;
use crate::hvs::{HvsError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanData {
    /// `d -> [(block size, count per primitive d-th root)]`, sizes ascending.
    pub cyclotomic: BTreeMap<u64, Vec<(usize, usize)>>,
    /// Factor of the characteristic polynomial coprime to every cyclotomic
    /// polynomial; its roots are the non-root-of-unity eigenvalues.
    pub remainder: RatPoly,
}

impl JordanData {
    /// Dimension of the generalized eigenspace at each primitive d-th root.
    pub fn dim_per_root(&self, d: u64) -> usize {
        self.cyclotomic.get(&d).map_or(0, |v| v.iter().map(|&(k, c)| k * c).sum())
    }

    /// Largest Jordan block size at the given order (0 when absent).
    pub fn max_block(&self, d: u64) -> usize {
        self.cyclotomic.get(&d).and_then(|v| v.iter().map(|&(k, _)| k).max()).unwrap_or(0)
    }

    /// Total dimension carried by root-of-unity eigenvalues.
    pub fn root_of_unity_dim(&self) -> usize {
        self.cyclotomic.iter().map(|(&d, _)| euler_phi(d) as usize * self.dim_per_root(d)).sum()
    }

    /// Dimension of the non-root-of-unity part.
    pub fn remainder_dim(&self) -> usize {
        self.remainder.degree().unwrap_or(0)
    }

    /// All eigenvalues are roots of unity.
    pub fn is_quasi_unipotent(&self) -> bool {
        self.remainder_dim() == 0
    }

    /// Least common multiple of the orders: the order of the semisimple part
    /// when the matrix is quasi-unipotent.
    pub fn order(&self) -> u64 {
        self.cyclotomic.keys().fold(1, |acc, &d| num_integer::lcm(acc, d))
    }
}

/// Computes the Jordan data of a rational invertible square matrix.
pub fn jordan_data(h: &Matrix) -> Result<JordanData> {
    let n = h.rows();
    if !h.is_square() {
        return Err(HvsError::Exact(crate::exact::ExactError::NonSquare {
            rows: h.rows(),
            cols: h.cols(),
        }));
    }
    if !h.is_rational() {
        return Err(HvsError::Exact(crate::exact::ExactError::NonRational));
    }
    if h.rank() != n {
        return Err(HvsError::SingularMonodromy);
    }
    let chi = RatPoly::char_poly(h).map_err(HvsError::Exact)?;
    let (factors, remainder) = cyclotomic_split(&chi);
    let mut out = BTreeMap::new();
    for &(d, mult) in &factors {
        let phi = euler_phi(d) as usize;
        let p = cyclotomic(d).eval_matrix(h).map_err(HvsError::Exact)?;
        // kernel dimensions of P, P^2, ... stabilise at phi * (total size)
        let mut ker_dims = vec![0usize];
        let mut power = Matrix::identity(n);
        for _ in 1..=mult {
            power = &power * &p;
            ker_dims.push(n - power.rank());
        }
        // blocks of size >= j, per primitive root
        let mut at_least = Vec::new();
        for j in 1..ker_dims.len() {
            let diff = ker_dims[j] - ker_dims[j - 1];
            if diff % phi != 0 {
                return Err(HvsError::DimensionMismatch(format!(
                    "kernel growth of Phi_{d}(h)^{j} is not a multiple of phi({d})"
                )));
            }
            at_least.push(diff / phi);
        }
        let mut sizes = Vec::new();
        for j in 1..=at_least.len() {
            let this = at_least[j - 1] - at_least.get(j).copied().unwrap_or(0);
            if this > 0 {
                sizes.push((j, this));
            }
        }
        out.insert(d, sizes);
    }
    Ok(JordanData { cyclotomic: out, remainder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hvs::blocks::jordan_block;

    #[test]
    fn jordan_block_is_one_block_of_size_two() {
        let d = jordan_data(&jordan_block(2)).unwrap();
        assert_eq!(d.cyclotomic.get(&1), Some(&vec![(2, 1)]));
        assert!(d.is_quasi_unipotent());
    }

    #[test]
    fn identity_is_three_singletons() {
        let d = jordan_data(&Matrix::identity(3)).unwrap();
        assert_eq!(d.cyclotomic.get(&1), Some(&vec![(1, 3)]));
    }

    #[test]
    fn companion_of_phi6() {
        let c = cyclotomic(6).companion().unwrap();
        let d = jordan_data(&c).unwrap();
        assert_eq!(d.cyclotomic.get(&6), Some(&vec![(1, 1)]));
        assert_eq!(d.order(), 6);
        assert_eq!(d.root_of_unity_dim(), 2);
    }

    #[test]
    fn mixed_structure() {
        // J_2 at 1, plus companion of Phi_4^2 (size-2 blocks at +-i)
        let p = cyclotomic(4).pow(2);
        let m = Matrix::block_diag(&[&jordan_block(2), &p.companion().unwrap()]);
        let d = jordan_data(&m).unwrap();
        assert_eq!(d.cyclotomic.get(&1), Some(&vec![(2, 1)]));
        assert_eq!(d.cyclotomic.get(&4), Some(&vec![(2, 1)]));
        assert_eq!(d.order(), 4);
        assert_eq!(d.root_of_unity_dim(), 2 + 4);
    }

    #[test]
    fn non_unity_eigenvalues_go_to_remainder() {
        let m = Matrix::from_int_rows(&[&[2, 0], &[0, 1]]);
        let d = jordan_data(&m).unwrap();
        assert_eq!(d.remainder_dim(), 1);
        assert_eq!(d.dim_per_root(1), 1);
        // singular matrices are rejected
        assert!(jordan_data(&Matrix::from_int_rows(&[&[0]])).is_err());
    }
}
