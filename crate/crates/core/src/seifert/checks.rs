//! Validity checks on fractured data and on fractured linking matrices.

use num_traits::Zero;

use crate::exact::inertia::{symmetric_inertia, Inertia};
use crate::exact::matrix::Matrix;
use crate::exact::poly::RatPoly;
use crate::exact::rational::Rational;
use crate::seifert::data::FracturedData;
use crate::seifert::{Result, SeifertError};

#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    fn push(&mut self, name: &'static str, pass: bool, detail: String) {
        self.items.push(CheckItem { name, pass, detail });
    }
}

/// Verifies the structural identities of a fractured Seifert matrix:
/// monodromy invariance, the transpose identity, block structure with
/// respect to the eigenspace decomposition, non-degeneracy of the pieces
/// and negative definiteness of the boundary piece.
pub fn seifert_checks(fd: &FracturedData) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let s = &fd.s;
    let h = &fd.h_res;
    let u = fd.dim_u;

    // S(h a, h b) = S(a, b): h^t S h = S
    let inv = &(&(&h.transpose() * s) * h) - s;
    report.push("monodromy invariance", inv.is_zero(), witness(&inv));

    // S(a, b) = S(h b, a): S = S^t h
    let tr = &(&s.transpose() * h) - s;
    report.push("transpose identity", tr.is_zero(), witness(&tr));

    // eigenspace split of the restricted monodromy
    let chi = RatPoly::char_poly(h).map_err(SeifertError::Exact)?;
    let z_minus_one = RatPoly::from_ints(&[-1, 1]);
    let mut non_unit = chi;
    let mut unit_mult = 0usize;
    while let Some(q) = non_unit.divides_exactly(&z_minus_one).map_err(SeifertError::Exact)? {
        non_unit = q;
        unit_mult += 1;
    }
    let unit = (h - &Matrix::identity(u)).kernel_basis();
    report.push(
        "unit part semisimple",
        unit.cols() == unit_mult,
        format!("kernel dim {} vs multiplicity {unit_mult}", unit.cols()),
    );
    let neq = non_unit.eval_matrix(h).map_err(SeifertError::Exact)?.kernel_basis();

    // block structure: S vanishes between the two eigenspace parts
    let cross1 = &(&neq.transpose() * s) * &unit;
    let cross2 = &(&unit.transpose() * s) * &neq;
    report.push(
        "block structure",
        cross1.is_zero() && cross2.is_zero(),
        format!("cross blocks {}x{} and {}x{}", cross1.rows(), cross1.cols(), cross2.rows(), cross2.cols()),
    );

    // non-degeneracy away from eigenvalue 1
    let s_neq = &(&neq.transpose() * s) * &neq;
    report.push(
        "non-unit block nondegenerate",
        s_neq.rank() == s_neq.rows(),
        format!("rank {} of {}", s_neq.rank(), s_neq.rows()),
    );

    // unit part: symmetric, nondegenerate, with at least n - 1 negative
    // directions (the boundary block, negative definite by speciality)
    let s_unit = &(&unit.transpose() * s) * &unit;
    let symmetric = s_unit.is_symmetric() && s_unit.is_rational();
    report.push("unit block symmetric", symmetric, String::new());
    if symmetric {
        let inertia = symmetric_inertia(&s_unit).map_err(SeifertError::Exact)?;
        let boundary = fd.n.saturating_sub(1);
        report.push(
            "unit block nondegenerate",
            inertia.n_zero == 0,
            format!("nullity {}", inertia.n_zero),
        );
        report.push(
            "boundary block negative definite",
            inertia.n_minus >= boundary,
            format!("{} negative directions, need n - 1 = {boundary}", inertia.n_minus),
        );
        report.push(
            "image block count",
            inertia.dim() == boundary + fd.c_gamma && inertia.n_zero == 0,
            format!("unit dim {} vs (n - 1) + c = {}", inertia.dim(), boundary + fd.c_gamma),
        );
    }
    Ok(report)
}

fn witness(residual: &Matrix) -> String {
    if residual.is_zero() {
        return String::new();
    }
    for r in 0..residual.rows() {
        for c in 0..residual.cols() {
            if !residual.at(r, c).is_zero() {
                return format!("first nonzero residual at ({r}, {c}): {}", residual.at(r, c));
            }
        }
    }
    String::new()
}

#[derive(Clone, Debug)]
pub struct LinkingReport {
    pub matrix: Matrix,
    pub inertia: Inertia,
    pub kernel_is_diagonal_span: bool,
}

impl LinkingReport {
    pub fn pass(&self) -> bool {
        self.inertia.n_plus == 0 && self.inertia.n_zero == 1 && self.kernel_is_diagonal_span
    }
}

/// Builds the fractured linking matrix from the pairwise linking numbers of
/// a special link (strictly positive off the diagonal, diagonal forced by
/// zero row sums) and verifies it is negative semi-definite with kernel
/// spanned by the all-ones vector.
pub fn linking_matrix_check(offdiag: &Matrix, n: usize) -> Result<LinkingReport> {
    if n < 2 || offdiag.rows() != n || offdiag.cols() != n {
        return Err(SeifertError::InvalidStructure(format!(
            "need an {n}x{n} matrix of pairwise linking numbers with n >= 2"
        )));
    }
    if !offdiag.is_rational() {
        return Err(SeifertError::InvalidStructure("linking numbers must be rational".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = offdiag.at(i, j);
            if v != offdiag.at(j, i) {
                return Err(SeifertError::InvalidStructure(format!(
                    "linking numbers must be symmetric; entries ({i},{j}) and ({j},{i}) differ"
                )));
            }
            if v.re <= Rational::zero() {
                return Err(SeifertError::NotSpecial);
            }
        }
    }
    let mut l = offdiag.clone();
    for i in 0..n {
        let mut sum = Rational::zero();
        for j in 0..n {
            if j != i {
                sum += &offdiag.at(i, j).re;
            }
        }
        *l.at_mut(i, i) = crate::exact::gaussian::GaussianRational::from_rational(-sum);
    }
    let inertia = symmetric_inertia(&l).map_err(SeifertError::Exact)?;
    let kernel = l.kernel_basis();
    let ones = Matrix::from_fn(n, 1, |_, _| crate::exact::gaussian::GaussianRational::one());
    let kernel_is_diagonal_span = kernel.cols() == 1 && Matrix::same_span(&kernel, &ones);
    Ok(LinkingReport { matrix: l, inertia, kernel_is_diagonal_span })
}
