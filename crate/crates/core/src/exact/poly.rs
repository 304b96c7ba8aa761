//! Univariate polynomials over `Q`, lowest degree first.

use num_traits::{One, Zero};
use std::fmt;

use super::matrix::Matrix;
use super::rational::{rat_int, Rational};
use super::{ExactError, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    /// Normalises away trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: usize) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divmod(&self, div: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if div.is_zero() {
            return Err(ExactError::ZeroPolynomialDivision);
        }
        let dd = div.degree().unwrap();
        let lead_inv = Rational::one() / div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            if !f.is_zero() {
                quot[k] = f.clone();
                for (j, c) in div.coeffs.iter().enumerate() {
                    rem[k + j] -= &f * c;
                }
            }
            rem.pop();
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Does `div` divide `self` exactly?
    pub fn divides_exactly(&self, div: &RatPoly) -> Result<Option<RatPoly>> {
        let (q, r) = self.divmod(div)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * &rat_int(k as i64 + 1))
                .collect(),
        )
    }

    /// Monic normalisation (zero stays zero).
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&(Rational::one() / l.clone())),
        }
    }

    /// Monic gcd over `Q`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).expect("b nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Coefficient reversal `z^deg * p(1/z)`.
    pub fn reverse(&self) -> RatPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        RatPoly::new(c)
    }

    /// Monic characteristic polynomial `det(zI - M)` via the
    /// Faddeev-LeVerrier recursion; requires rational entries.
    pub fn char_poly(m: &Matrix) -> Result<RatPoly> {
        if !m.is_square() {
            return Err(ExactError::NonSquare { rows: m.rows(), cols: m.cols() });
        }
        if !m.is_rational() {
            return Err(ExactError::NonRational);
        }
        let n = m.rows();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut acc = Matrix::identity(n);
        for k in 1..=n {
            acc = m * &acc;
            let tr: Rational = (0..n).map(|i| acc.at(i, i).re.clone()).sum();
            let c = -tr / rat_int(k as i64);
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let v = &acc.at(i, i).re + &c;
                acc.at_mut(i, i).re = v;
            }
        }
        Ok(RatPoly::new(coeffs))
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(ExactError::NonSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(&crate::exact::gaussian::GaussianRational::from_rational(c.clone()));
        }
        Ok(acc)
    }

    /// Companion matrix of a monic polynomial of degree >= 1.
    pub fn companion(&self) -> Result<Matrix> {
        let d = self.degree().filter(|&d| d >= 1).ok_or_else(|| {
            ExactError::DimensionMismatch("companion matrix needs degree >= 1".into())
        })?;
        if !self.leading().unwrap().is_one() {
            return Err(ExactError::DimensionMismatch("companion matrix needs a monic polynomial".into()));
        }
        let mut m = Matrix::zero(d, d);
        for i in 1..d {
            *m.at_mut(i, i - 1) = crate::exact::gaussian::GaussianRational::one();
        }
        for i in 0..d {
            *m.at_mut(i, d - 1) =
                crate::exact::gaussian::GaussianRational::from_rational(-self.coeff(i));
        }
        Ok(m)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn divmod_exact() {
        // (z-1)(z+2) = z^2 + z - 2
        let p = RatPoly::from_ints(&[-2, 1, 1]);
        let d = RatPoly::from_ints(&[-1, 1]);
        let (q, r) = p.divmod(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, RatPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn char_poly_examples() {
        // Jordan block J_2 at eigenvalue 1: (z-1)^2
        let j2 = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(RatPoly::char_poly(&j2).unwrap(), RatPoly::from_ints(&[1, -2, 1]));
        // identity, n = 3: (z-1)^3
        assert_eq!(
            RatPoly::char_poly(&Matrix::identity(3)).unwrap(),
            RatPoly::from_ints(&[-1, 3, -3, 1])
        );
        // rotation [[0,-1],[1,0]]: z^2 + 1
        let rot = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(RatPoly::char_poly(&rot).unwrap(), RatPoly::from_ints(&[1, 0, 1]));
        // empty matrix: the constant 1
        assert_eq!(RatPoly::char_poly(&Matrix::zero(0, 0)).unwrap(), RatPoly::one());
    }

    #[test]
    fn char_poly_constant_term_is_det_of_minus_m() {
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[-1, 3, 5], &[0, 7, -2]]);
        let p = RatPoly::char_poly(&m).unwrap();
        let det_neg_m = (-&m).det().unwrap();
        assert_eq!(p.eval(&rat(0, 1)), det_neg_m.re);
    }

    #[test]
    fn companion_has_right_char_poly() {
        let p = RatPoly::from_ints(&[3, -1, 0, 1]); // z^3 - z + 3
        let c = p.companion().unwrap();
        assert_eq!(RatPoly::char_poly(&c).unwrap(), p);
    }
}
