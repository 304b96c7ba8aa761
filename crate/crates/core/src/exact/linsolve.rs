//! Affine linear systems over `Q` and a small symbolic-matrix layer used to
//! solve for model forms: matrices whose entries are affine expressions in a
//! set of real unknowns (each complex unknown contributes a real and an
//! imaginary variable).

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::matrix::Matrix;
use super::rational::Rational;
use super::{ExactError, Result};

/// `sum coeffs[k] x_k + constant`.
#[derive(Clone, Debug)]
pub struct LinExpr {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl LinExpr {
    pub fn zero(n_vars: usize) -> Self {
        LinExpr { coeffs: vec![Rational::zero(); n_vars], constant: Rational::zero() }
    }

    pub fn var(n_vars: usize, k: usize) -> Self {
        let mut e = Self::zero(n_vars);
        e.coeffs[k] = Rational::one();
        e
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut e = Self::zero(n_vars);
        e.constant = c;
        e
    }

    pub fn add(&self, o: &LinExpr) -> LinExpr {
        LinExpr {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &o.constant,
        }
    }

    pub fn sub(&self, o: &LinExpr) -> LinExpr {
        LinExpr {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
            constant: &self.constant - &o.constant,
        }
    }

    pub fn scale(&self, s: &Rational) -> LinExpr {
        LinExpr {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
            constant: &self.constant * s,
        }
    }

    pub fn neg(&self) -> LinExpr {
        self.scale(&-Rational::one())
    }
}

/// Complex affine expression.
#[derive(Clone, Debug)]
pub struct CLinExpr {
    pub re: LinExpr,
    pub im: LinExpr,
}

impl CLinExpr {
    pub fn zero(n: usize) -> Self {
        CLinExpr { re: LinExpr::zero(n), im: LinExpr::zero(n) }
    }

    pub fn constant(n: usize, z: &GaussianRational) -> Self {
        CLinExpr {
            re: LinExpr::constant(n, z.re.clone()),
            im: LinExpr::constant(n, z.im.clone()),
        }
    }

    pub fn add(&self, o: &CLinExpr) -> CLinExpr {
        CLinExpr { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CLinExpr) -> CLinExpr {
        CLinExpr { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn conj(&self) -> CLinExpr {
        CLinExpr { re: self.re.clone(), im: self.im.neg() }
    }

    /// Multiplication by a constant scalar.
    pub fn scale(&self, z: &GaussianRational) -> CLinExpr {
        CLinExpr {
            re: self.re.scale(&z.re).sub(&self.im.scale(&z.im)),
            im: self.re.scale(&z.im).add(&self.im.scale(&z.re)),
        }
    }
}

/// Matrix of complex affine expressions.
#[derive(Clone, Debug)]
pub struct SymMatrix {
    pub rows: usize,
    pub cols: usize,
    pub n_vars: usize,
    pub entries: Vec<CLinExpr>,
}

impl SymMatrix {
    /// A fully unknown `rows x cols` matrix; entry `(r, c)` uses the real
    /// variable `2*(r*cols+c)` and imaginary variable `2*(r*cols+c)+1`.
    pub fn unknown(rows: usize, cols: usize) -> SymMatrix {
        let n_vars = 2 * rows * cols;
        let entries = (0..rows * cols)
            .map(|k| CLinExpr {
                re: LinExpr::var(n_vars, 2 * k),
                im: LinExpr::var(n_vars, 2 * k + 1),
            })
            .collect();
        SymMatrix { rows, cols, n_vars, entries }
    }

    pub fn at(&self, r: usize, c: usize) -> &CLinExpr {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> SymMatrix {
        let entries = (0..self.cols * self.rows)
            .map(|k| {
                let (r, c) = (k / self.rows, k % self.rows);
                self.at(c, r).clone()
            })
            .collect();
        SymMatrix { rows: self.cols, cols: self.rows, n_vars: self.n_vars, entries }
    }

    pub fn conj(&self) -> SymMatrix {
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            n_vars: self.n_vars,
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    pub fn sub(&self, o: &SymMatrix) -> SymMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            n_vars: self.n_vars,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, z: &GaussianRational) -> SymMatrix {
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            n_vars: self.n_vars,
            entries: self.entries.iter().map(|e| e.scale(z)).collect(),
        }
    }

    /// `constant * self`.
    pub fn mul_const_left(&self, m: &Matrix) -> SymMatrix {
        assert_eq!(m.cols(), self.rows);
        let mut entries = Vec::with_capacity(m.rows() * self.cols);
        for r in 0..m.rows() {
            for c in 0..self.cols {
                let mut acc = CLinExpr::zero(self.n_vars);
                for k in 0..self.rows {
                    acc = acc.add(&self.at(k, c).scale(m.at(r, k)));
                }
                entries.push(acc);
            }
        }
        SymMatrix { rows: m.rows(), cols: self.cols, n_vars: self.n_vars, entries }
    }

    /// `self * constant`.
    pub fn mul_const_right(&self, m: &Matrix) -> SymMatrix {
        assert_eq!(self.cols, m.rows());
        let mut entries = Vec::with_capacity(self.rows * m.cols());
        for r in 0..self.rows {
            for c in 0..m.cols() {
                let mut acc = CLinExpr::zero(self.n_vars);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).scale(m.at(k, c)));
                }
                entries.push(acc);
            }
        }
        SymMatrix { rows: self.rows, cols: m.cols(), n_vars: self.n_vars, entries }
    }
}

/// Accumulates rows `sum a_k x_k = c` and solves them exactly.
pub struct LinearSystem {
    n_vars: usize,
    rows: Vec<(Vec<Rational>, Rational)>,
}

pub struct LinearSolution {
    /// One exact solution, with every free variable set to zero.
    pub particular: Vec<Rational>,
    /// Basis of the homogeneous solution space.
    pub nullspace: Vec<Vec<Rational>>,
}

impl LinearSystem {
    pub fn new(n_vars: usize) -> Self {
        LinearSystem { n_vars, rows: Vec::new() }
    }

    pub fn require_zero(&mut self, e: &LinExpr) {
        assert_eq!(e.coeffs.len(), self.n_vars);
        self.rows.push((e.coeffs.clone(), -e.constant.clone()));
    }

    pub fn require_zero_complex(&mut self, e: &CLinExpr) {
        self.require_zero(&e.re);
        self.require_zero(&e.im);
    }

    /// Constrains every entry of a symbolic matrix to vanish.
    pub fn require_zero_matrix(&mut self, m: &SymMatrix) {
        for e in &m.entries {
            self.require_zero_complex(e);
        }
    }

    pub fn solve(&self) -> Result<LinearSolution> {
        let n = self.n_vars;
        let rows = self.rows.len();
        let mut aug = Matrix::zero(rows, n + 1);
        for (r, (coeffs, rhs)) in self.rows.iter().enumerate() {
            for (c, a) in coeffs.iter().enumerate() {
                *aug.at_mut(r, c) = GaussianRational::from_rational(a.clone());
            }
            *aug.at_mut(r, n) = GaussianRational::from_rational(rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&n) {
            return Err(ExactError::Inconsistent);
        }
        let mut particular = vec![Rational::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = red.at(r, n).re.clone();
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut nullspace = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rational::zero(); n];
            v[fc] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.at(r, fc).re.clone();
            }
            nullspace.push(v);
        }
        Ok(LinearSolution { particular, nullspace })
    }
}

/// Instantiates an unknown matrix from a variable assignment.
pub fn instantiate(rows: usize, cols: usize, assignment: &[Rational]) -> Matrix {
    Matrix::from_fn(rows, cols, |r, c| {
        let k = r * cols + c;
        GaussianRational::new(assignment[2 * k].clone(), assignment[2 * k + 1].clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    #[test]
    fn solve_simple() {
        // x + y = 3, x - y = 1
        let mut sys = LinearSystem::new(2);
        let x = LinExpr::var(2, 0);
        let y = LinExpr::var(2, 1);
        sys.require_zero(&x.add(&y).sub(&LinExpr::constant(2, rat_int(3))));
        sys.require_zero(&x.sub(&y).sub(&LinExpr::constant(2, rat_int(1))));
        let sol = sys.solve().unwrap();
        assert_eq!(sol.particular, vec![rat_int(2), rat_int(1)]);
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn underdetermined_and_inconsistent() {
        let mut sys = LinearSystem::new(2);
        sys.require_zero(&LinExpr::var(2, 0).add(&LinExpr::var(2, 1)));
        let sol = sys.solve().unwrap();
        assert_eq!(sol.nullspace.len(), 1);

        let mut bad = LinearSystem::new(1);
        bad.require_zero(&LinExpr::constant(1, rat_int(1)));
        assert!(bad.solve().is_err());
    }
}
