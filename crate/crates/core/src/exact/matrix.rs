//! Dense matrices over `Q(i)` with exact elimination-based kernels, ranks,
//! inverses and solvers. Pivot selection is first-nonzero, so every routine
//! is deterministic.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::{parse_gaussian, GaussianRational};
use super::rational::Rational;
use super::{ExactError, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Integer-literal constructor for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|row| row.iter().map(|&n| GaussianRational::from_int(n)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut GaussianRational {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).conj())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.conj_transpose() == *self
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == *self
    }

    pub fn scale(&self, s: &GaussianRational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Block-diagonal direct sum.
    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    *m.at_mut(ro + r, co + c) = b.at(r, c).clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + right.cols, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { right.at(r, c - self.cols).clone() }
        })
    }

    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "vstack col mismatch");
        Matrix::from_fn(self.rows + below.rows, self.cols, |r, c| {
            if r < self.rows { self.at(r, c).clone() } else { below.at(r - self.rows, c).clone() }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &[c])
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inv().expect("pivot nonzero");
            for c in 0..m.cols {
                let v = m.at(row, c) * &inv;
                *m.at_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c) - &(&f * m.at(row, c));
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact rank by elimination over `Q(i)`.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact determinant by elimination (square input).
    pub fn det(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = -&det;
            }
            let pivot = m.at(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let f = m.at(r, col) * &inv;
                    for c in col..n {
                        let v = m.at(r, c) - &(&f * m.at(col, c));
                        *m.at_mut(r, c) = v;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(ExactError::Singular);
        }
        Ok(red.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }

    /// Solves `self * X = rhs` exactly. Free variables are set to zero;
    /// an inconsistent system is an error.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let (red, pivots) = aug.rref();
        // any pivot in the rhs block makes the system inconsistent
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(ExactError::Inconsistent);
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                *x.at_mut(p, c) = red.at(r, self.cols + c).clone();
            }
        }
        Ok(x)
    }

    /// Basis of the right kernel, as columns. Deterministic (free columns in
    /// increasing order).
    pub fn kernel_basis(&self) -> Matrix {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zero(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            *k.at_mut(fc, j) = GaussianRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                *k.at_mut(p, j) = -red.at(r, fc);
            }
        }
        k
    }

    /// Canonical basis of the column space: the nonzero rows of
    /// `rref(self^t)`, returned as columns. The identity when the columns
    /// already span everything.
    pub fn column_space_basis(&self) -> Matrix {
        let (red, pivots) = self.transpose().rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..red.cols()).collect();
        red.submatrix(&rows, &cols).transpose()
    }

    /// Intersection of the column spans of `a` and `b`, as columns.
    pub fn span_intersection(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.rows, b.rows);
        if a.cols == 0 || b.cols == 0 {
            return Matrix::zero(a.rows, 0);
        }
        // kernel of [a | -b] gives pairs (x, y) with a x = b y
        let stacked = a.hstack(&b.scale(&(-&GaussianRational::one())));
        let ker = stacked.kernel_basis();
        let xs = ker.submatrix(&(0..a.cols).collect::<Vec<_>>(), &(0..ker.cols()).collect::<Vec<_>>());
        (a * &xs).column_space_basis()
    }

    /// Do the columns of `a` and `b` span the same subspace?
    pub fn same_span(a: &Matrix, b: &Matrix) -> bool {
        a.column_space_basis() == b.column_space_basis()
    }

    /// Realification: `A + iB` maps to `[[A, -B], [B, A]]` (2r x 2c, real).
    pub fn realify(&self) -> Matrix {
        Matrix::from_fn(2 * self.rows, 2 * self.cols, |r, c| {
            let (br, bc) = (r % self.rows, c % self.cols);
            let e = self.at(br, bc);
            match (r >= self.rows, c >= self.cols) {
                (false, false) | (true, true) => GaussianRational::from_rational(e.re.clone()),
                (false, true) => GaussianRational::from_rational(-e.im.clone()),
                (true, false) => GaussianRational::from_rational(e.im.clone()),
            }
        })
    }

    /// The real part as a rational matrix; errors if any entry has a nonzero
    /// imaginary part.
    pub fn rational_entries(&self) -> Result<Vec<Rational>> {
        if !self.is_rational() {
            return Err(ExactError::NonRational);
        }
        Ok(self.data.iter().map(|z| z.re.clone()).collect())
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + &(a * b);
                    *out.at_mut(r, c) = v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_wire()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).to_wire()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(de::Error::custom("ragged matrix rows"));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            for s in row {
                data.push(parse_gaussian(s).map_err(de::Error::custom)?);
            }
        }
        Ok(Matrix::new(r, c, data))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zero(3, 3).rank(), 0);
        // [[1,2],[2,4]] has rank 1
        assert_eq!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());

        let rhs = Matrix::from_int_rows(&[&[3], &[6]]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(&m * &x, rhs);
        let bad = Matrix::from_int_rows(&[&[3], &[7]]);
        assert!(m.solve(&bad).is_err());
    }

    #[test]
    fn column_space_canonical() {
        let m = Matrix::from_int_rows(&[&[2, 0], &[0, 0], &[0, 3]]);
        let b = m.column_space_basis();
        assert_eq!(b, Matrix::from_int_rows(&[&[1, 0], &[0, 0], &[0, 1]]));
        assert_eq!(Matrix::identity(3).column_space_basis(), Matrix::identity(3));
    }

    #[test]
    fn realify_multiplies() {
        let i = GaussianRational::i();
        let z = Matrix::new(1, 1, vec![GaussianRational::new(rat(1, 2), rat(-1, 3))]);
        let w = Matrix::new(1, 1, vec![&i * &GaussianRational::from_int(2)]);
        let prod = (&z * &w).realify();
        assert_eq!(prod, &z.realify() * &w.realify());
    }

    #[test]
    fn serde_round_trip() {
        let m = Matrix::from_rows(vec![vec![
            GaussianRational::new(rat(1, 2), rat(-1, 3)),
            GaussianRational::from_int(0),
        ]]);
        let s = serde_json::to_string(&m).unwrap();
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
