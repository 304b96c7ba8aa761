//! Exact subspace decomposition of the fiber homology of a simple fibred
//! link: `H = U_neq1 + U_im + U_bnd + U_B + U_fix`, with
//! `U = U_neq1 + U_im + U_bnd` the kernel of the map to the ambient
//! manifold.

use crate::exact::matrix::Matrix;
use crate::exact::poly::RatPoly;
use crate::hvs::jordan::jordan_data;
use crate::seifert::data::{FibredLinkData, SubspaceDecomposition};
use crate::seifert::{Result, SeifertError};

/// Kernel of `(h - I)^a` where `a` is the algebraic multiplicity of the
/// eigenvalue 1, i.e. the generalized unit eigenspace.
fn unit_generalized_eigenspace(h: &Matrix) -> Result<(Matrix, RatPoly)> {
    let chi = RatPoly::char_poly(h).map_err(SeifertError::Exact)?;
    let z_minus_one = RatPoly::from_ints(&[-1, 1]);
    let mut rest = chi;
    let mut a = 0usize;
    while let Some(q) = rest.divides_exactly(&z_minus_one).map_err(SeifertError::Exact)? {
        rest = q;
        a += 1;
    }
    let n = h.rows();
    let power = (&(h - &Matrix::identity(n))).pow(a as u64).map_err(SeifertError::Exact)?;
    Ok((power.kernel_basis(), rest))
}

/// Computes the five-part decomposition. Requires valid fibration data with
/// no Jordan block of size 3 or more at eigenvalue 1.
pub fn decompose_subspaces(fl: &FibredLinkData) -> Result<SubspaceDecomposition> {
    fl.validate()?;
    let jd = jordan_data(&fl.h)?;
    let max_unit_block = jd.max_block(1);
    if max_unit_block > 2 {
        return Err(SeifertError::NotSimple(max_unit_block));
    }
    let n_ambient = fl.dim();
    let h = &fl.h;
    let b_form = fl.b.transpose(); // form matrix: B(x, y) = x^t B y

    let (u_eq1, non_unit_factor) = unit_generalized_eigenspace(h)?;
    let u_neq1 = non_unit_factor.eval_matrix(h).map_err(SeifertError::Exact)?.kernel_basis();

    // boundary part: kernel of the form inside the fixed space
    let h_minus_i = h - &Matrix::identity(n_ambient);
    let u_bnd = fl.b.vstack(&h_minus_i).kernel_basis();
    let expected_bnd = fl.n.saturating_sub(1);
    if u_bnd.cols() != expected_bnd {
        return Err(SeifertError::BoundaryDimension { got: u_bnd.cols(), expected: expected_bnd });
    }

    // image part inside the unit eigenspace
    let u_im = (&h_minus_i * &u_eq1).column_space_basis();

    // preimages: columns solving (h - I) x = u_im
    let u_b = if u_im.cols() == 0 {
        Matrix::zero(n_ambient, 0)
    } else {
        h_minus_i.solve(&u_im).map_err(|_| {
            SeifertError::Decomposition("image part has no preimage under h - I".into())
        })?
    };
    if u_b.rank() != u_im.cols() {
        return Err(SeifertError::Decomposition("preimage columns are dependent".into()));
    }

    // fixed part: inside ker(h - I), orthogonal to U_B for the form (it is
    // automatically orthogonal to the image and boundary parts), and split
    // off the radical which is exactly the boundary part
    let fixed = h_minus_i.kernel_basis();
    let x_space = if u_b.cols() == 0 {
        fixed.clone()
    } else {
        // rows: (K^t B U_B)^t  y = 0
        let constraint = (&(&fixed.transpose() * &b_form) * &u_b).transpose();
        &fixed * &constraint.kernel_basis()
    };
    let b_on_x = &(&x_space.transpose() * &b_form) * &x_space;
    let radical_coords = b_on_x.vstack(&b_on_x.transpose()).kernel_basis();
    let radical = (&x_space * &radical_coords).column_space_basis();
    if !Matrix::same_span(&radical, &u_bnd) {
        return Err(SeifertError::Decomposition(
            "radical of the form on the fixed orthogonal space is not the boundary part".into(),
        ));
    }
    // complement of the radical inside the X space, along non-pivot coords
    let (_, pivots) = radical_coords.transpose().rref();
    let free: Vec<usize> = (0..x_space.cols()).filter(|c| !pivots.contains(c)).collect();
    let u_fix = x_space.submatrix(&(0..n_ambient).collect::<Vec<_>>(), &free);

    let dec = SubspaceDecomposition { u_neq1, u_im, u_bnd, u_b, u_fix };
    check_direct(&dec, n_ambient, &b_form)?;
    Ok(dec)
}

fn check_direct(dec: &SubspaceDecomposition, n_ambient: usize, b_form: &Matrix) -> Result<()> {
    let u_sigma = dec.u_sigma();
    if u_sigma.rank() != u_sigma.cols() {
        return Err(SeifertError::Decomposition("U is not a direct sum of its three parts".into()));
    }
    let full = u_sigma.hstack(&dec.u_b).hstack(&dec.u_fix);
    if full.rank() != n_ambient || full.cols() != n_ambient {
        return Err(SeifertError::Decomposition(format!(
            "parts span rank {} of {n_ambient}",
            full.rank()
        )));
    }
    // the form must be non-degenerate on the fixed part and vanish against it
    // from the image, boundary and preimage parts
    let f = dec.u_fix.cols();
    let b_fix = &(&dec.u_fix.transpose() * b_form) * &dec.u_fix;
    if b_fix.rank() != f {
        return Err(SeifertError::Decomposition("form degenerate on the fixed part".into()));
    }
    if f % 2 != 0 {
        return Err(SeifertError::Decomposition("fixed part has odd dimension".into()));
    }
    let others = dec.u_im.hstack(&dec.u_bnd).hstack(&dec.u_b);
    let cross = &(&dec.u_fix.transpose() * b_form) * &others;
    if !cross.is_zero() {
        return Err(SeifertError::Decomposition("fixed part is not orthogonal".into()));
    }
    Ok(())
}
