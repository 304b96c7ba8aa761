//! Mending: reconstruction of the full fibration data from fractured data.
//!
//! The unit-eigenvalue part of the fractured structure decomposes into
//! `n - 1` boundary summands (sign `+1`) and `c` image summands; mending
//! replaces each image summand by the corresponding two-dimensional
//! unipotent block and appends `g` symplectic fixed quanta.


use crate::exact::circle::AngleFraction;
use crate::exact::inertia::congruence_diagonalize;
use crate::exact::poly::RatPoly;
use crate::exact::matrix::Matrix;
use crate::hvs::blocks::{block_v_circle, block_w, fix_quantum};
use crate::hvs::structure::{change_basis, direct_sum_all, split_by_form, validate_hvs, Hvs, Sign};
use crate::seifert::data::{FibredLinkData, FracturedData};
use crate::seifert::{Result, SeifertError};

/// Rebuilds fibration data from fractured data. Round trip:
/// `mend(extract_fractured(fl, c, g))` agrees with `fl` up to isomorphism
/// (same Jordan data, signature profile and spectrum).
pub fn mend(fd: &FracturedData, epsilon: Sign) -> Result<FibredLinkData> {
    let frct = fd.fractured_hvs(epsilon)?;
    let report = validate_hvs(&frct)?;
    if !report.pass() {
        let names: Vec<&str> = report.violations.iter().map(|v| v.axiom.label()).collect();
        return Err(SeifertError::InvalidStructure(format!(
            "fractured structure fails: {}",
            names.join("; ")
        )));
    }
    let u = fd.dim_u;
    // split off the non-unit eigenspaces; inside the fractured structure the
    // unit part must be semisimple (boundary/image shape)
    let chi = RatPoly::char_poly(&fd.h_res).map_err(SeifertError::Exact)?;
    let z_minus_one = RatPoly::from_ints(&[-1, 1]);
    let mut non_unit = chi;
    let mut unit_mult = 0usize;
    while let Some(q) = non_unit.divides_exactly(&z_minus_one).map_err(SeifertError::Exact)? {
        non_unit = q;
        unit_mult += 1;
    }
    let unit_space = (&fd.h_res - &Matrix::identity(u)).kernel_basis();
    if unit_space.cols() != unit_mult {
        return Err(SeifertError::UnitShape(
            "monodromy is not semisimple at eigenvalue 1 inside the fractured subspace".into(),
        ));
    }
    let neq_space = non_unit.eval_matrix(&fd.h_res).map_err(SeifertError::Exact)?.kernel_basis();

    let basis = neq_space.hstack(&unit_space);
    if basis.cols() != u || basis.rank() != u {
        return Err(SeifertError::UnitShape("eigenspace split does not fill the subspace".into()));
    }
    let adapted = change_basis(&frct, &basis)?;
    let neq_idx: Vec<usize> = (0..neq_space.cols()).collect();
    let unit_idx: Vec<usize> = (neq_space.cols()..u).collect();
    let (v_neq, v_unit) = if unit_idx.is_empty() {
        (adapted.clone(), Hvs::zero_dim(epsilon))
    } else if neq_idx.is_empty() {
        (Hvs::zero_dim(epsilon), adapted.clone())
    } else {
        split_by_form(&adapted, &neq_idx, &unit_idx).map_err(|e| {
            SeifertError::UnitShape(format!("cannot split the unit part: {e}"))
        })?
    };

    // the unit part carries no form and a symmetric invertible variation
    // operator; congruence-diagonalise it to count signs
    if !v_unit.b.is_zero() {
        return Err(SeifertError::UnitShape("form does not vanish on the unit part".into()));
    }
    let v1 = &v_unit.v;
    if !v1.is_symmetric() {
        return Err(SeifertError::UnitShape("variation operator not symmetric on the unit part".into()));
    }
    let (diag, _) = congruence_diagonalize(v1).map_err(SeifertError::Exact)?;
    let negatives = diag.iter().filter(|d| crate::exact::rational::sign_of(d) < 0).count();
    let positives = diag.iter().filter(|d| crate::exact::rational::sign_of(d) > 0).count();
    if negatives + positives != diag.len() {
        return Err(SeifertError::DegenerateFractured);
    }
    // boundary blocks have sign +1 (variation -1); the declared component
    // count takes n - 1 of the negatives, the rest is the image part
    let boundary = fd.n.saturating_sub(1);
    if negatives < boundary {
        return Err(SeifertError::CountMismatch(format!(
            "unit part has {negatives} negative directions, fewer than n - 1 = {boundary}"
        )));
    }
    let c_plus = negatives - boundary;
    let c_minus = positives;
    if c_plus + c_minus != fd.c_gamma {
        return Err(SeifertError::CountMismatch(format!(
            "unit part leaves {c_plus}+{c_minus} image summands but c = {}",
            fd.c_gamma
        )));
    }

    let one = AngleFraction::from_ints(1, 1);
    let mut parts: Vec<Hvs> = Vec::new();
    for _ in 0..boundary {
        parts.push(block_w(1, &one, Sign::Plus, epsilon)?);
    }
    if v_neq.dim() > 0 {
        parts.push(v_neq);
    }
    for _ in 0..c_plus {
        parts.push(block_v_circle(2, &one, Sign::Plus, epsilon)?);
    }
    for _ in 0..c_minus {
        parts.push(block_v_circle(2, &one, Sign::Minus, epsilon)?);
    }
    for _ in 0..fd.g_gamma {
        parts.push(fix_quantum(epsilon)?);
    }
    let mended = direct_sum_all(epsilon, &parts)?;
    Ok(FibredLinkData { epsilon, n: fd.n, h: mended.h, b: mended.b, var: mended.v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hvs::blocks::realify_hvs;
    use crate::hvs::jordan::jordan_data;
    use crate::seifert::extract::extract_fractured;

    fn fl_from(parts: &[Hvs], n: usize) -> FibredLinkData {
        let sum = direct_sum_all(Sign::Minus, parts).unwrap();
        FibredLinkData { epsilon: Sign::Minus, n, h: sum.h, b: sum.b, var: sum.v }
    }

    #[test]
    fn inverse_of_boundary_extraction() {
        // dim U = 1, S = (-1), n = 2, c = g = 0 mends to W^1_1(+1)
        let fd = FracturedData {
            n: 2,
            c_gamma: 0,
            g_gamma: 0,
            dim_u: 1,
            basis: Matrix::identity(1),
            s: Matrix::from_int_rows(&[&[-1]]),
            h_res: Matrix::identity(1),
            b_res: Matrix::zero(1, 1),
        };
        let fl = mend(&fd, Sign::Minus).unwrap();
        let w = block_w(1, &AngleFraction::from_ints(1, 1), Sign::Plus, Sign::Minus).unwrap();
        assert_eq!(fl.h, w.h);
        assert_eq!(fl.b, w.b);
        assert_eq!(fl.var, w.v);
    }

    #[test]
    fn classical_case_v_from_s() {
        // n = 1, c = g = 0, S nondegenerate: mended variation = (S^t)^{-1};
        // h and b are recovered from the simple-structure formulas
        let s = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        let v = s.transpose().inverse().unwrap();
        let eps = Sign::Minus;
        let h_res = (&v * &v.conj_transpose().inverse().unwrap()).scale(&eps.flip().scalar());
        let b_res = &v.inverse().unwrap() * &(&h_res - &Matrix::identity(2));
        let fd = FracturedData {
            n: 1,
            c_gamma: 0,
            g_gamma: 0,
            dim_u: 2,
            basis: Matrix::identity(2),
            s: s.clone(),
            h_res,
            b_res,
        };
        let fl = mend(&fd, eps).unwrap();
        assert_eq!(fl.var, v);
        assert!(fl.validate().is_ok());
    }

    #[test]
    fn round_trip_preserves_jordan_data() {
        let one = AngleFraction::from_ints(1, 1);
        let quarter = AngleFraction::from_ints(1, 4);
        let parts = vec![
            block_w(1, &one, Sign::Plus, Sign::Minus).unwrap(),
            block_v_circle(2, &one, Sign::Plus, Sign::Minus).unwrap(),
            fix_quantum(Sign::Minus).unwrap(),
            realify_hvs(&block_w(1, &quarter, Sign::Plus, Sign::Minus).unwrap()),
        ];
        let fl = fl_from(&parts, 2);
        let fd = extract_fractured(&fl, 1, 1).unwrap();
        let mended = mend(&fd, Sign::Minus).unwrap();
        assert_eq!(mended.dim(), fl.dim());
        assert_eq!(jordan_data(&mended.h).unwrap(), jordan_data(&fl.h).unwrap());
        assert!(mended.validate().is_ok());
    }
}
