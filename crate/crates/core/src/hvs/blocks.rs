//! The indecomposable model blocks.
//!
//! Three families, all with `h` built from the upper Jordan block `J_k`:
//!
//! * `block_v_circle`: non-degenerate blocks at `lambda` on the unit circle,
//!   `(C^k; b_u, lambda J_k, (lambda J_k - I) b_u^{-1})`. The form `b_u` is
//!   pinned by the prescribed anti-diagonal and solved exactly from the
//!   invariance and hermitian identities; the prescription keeps entries in
//!   `Q(i)` only for quarter-turn angles.
//! * `block_w`: the simple blocks. Equal to `block_v_circle` away from
//!   `lambda = 1`; at `lambda = 1` the degenerate-form variant whose
//!   inverse variation operator carries the prescribed anti-diagonal.
//! * `block_offcircle`: the `2k`-dimensional blocks pairing `lambda` with
//!   `1/conj(lambda)`, for `0 < |lambda| < 1`.
//!
//! `realify_hvs` doubles any block into a rational structure realising the
//! block together with its conjugate; `conjugate_class` says which sign the
//! conjugate carries.

use num_traits::One;

use crate::exact::circle::AngleFraction;
use crate::exact::gaussian::GaussianRational;
use crate::exact::linsolve::{instantiate, LinearSystem, SymMatrix};
use crate::exact::matrix::Matrix;
use crate::exact::rational::Rational;
use crate::hvs::structure::{Hvs, Sign};
use crate::hvs::{HvsError, Result};

/// Upper Jordan block with eigenvalue 1.
pub fn jordan_block(k: usize) -> Matrix {
    Matrix::from_fn(k, k, |r, c| {
        if r == c || c == r + 1 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    })
}

/// `m` with `eps = (-1)^m`.
fn eps_exponent(eps: Sign) -> i64 {
    match eps {
        Sign::Minus => 1,
        Sign::Plus => 2,
    }
}

/// The scalar `lambda = e^{2 pi i s}` when it lies in `Q(i)`.
fn quarter_turn_scalar(s: &AngleFraction) -> Result<GaussianRational> {
    s.unit_scalar().ok_or_else(|| HvsError::UnsupportedAngle(s.to_string()))
}

/// Solves for the invariant `eps`-hermitian form with the prescribed
/// anti-diagonal: `conj(h)^t X h = X`, `conj(X)^t = eps X`,
/// `X[i][j] = 0` for `i + j <= k - 2` and
/// `X[i][k-1-i] = u (-1)^i i^(-m^2-k+1)`; free entries are set to zero.
fn solve_model_form(k: usize, h: &Matrix, u: Sign, eps: Sign) -> Result<Matrix> {
    let m = eps_exponent(eps);
    let corner = GaussianRational::i_pow(-m * m - k as i64 + 1);
    let x = SymMatrix::unknown(k, k);
    let mut sys = LinearSystem::new(x.n_vars);
    // invariance
    let inv = x.mul_const_left(&h.conj_transpose()).mul_const_right(h).sub(&x);
    sys.require_zero_matrix(&inv);
    // hermitian
    let herm = x.conj().transpose().sub(&x.scale(&eps.scalar()));
    sys.require_zero_matrix(&herm);
    // prescribed entries
    for i in 0..k {
        for j in 0..k {
            if i + j + 2 <= k {
                sys.require_zero_complex(x.at(i, j));
            }
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let val = corner.scale(&Rational::from_integer((sign * u.as_i64()).into()));
        let e = x.at(i, k - 1 - i).sub(&crate::exact::linsolve::CLinExpr::constant(x.n_vars, &val));
        sys.require_zero_complex(&e);
    }
    let sol = sys.solve().map_err(|_| HvsError::ModelBlock(format!("form system inconsistent (k={k})")))?;
    Ok(instantiate(k, k, &sol.particular))
}

/// The non-degenerate circle block at a quarter-turn angle.
pub fn block_v_circle(k: usize, s: &AngleFraction, u: Sign, eps: Sign) -> Result<Hvs> {
    assert!(k >= 1);
    let lambda = quarter_turn_scalar(s)?;
    let h = jordan_block(k).scale(&lambda);
    let b = solve_model_form(k, &h, u, eps)?;
    let v = &(&h - &Matrix::identity(k)) * &b.inverse().map_err(HvsError::Exact)?;
    Ok(Hvs::new(eps, b, h, v))
}

/// Solves for the inverse variation operator of the degenerate simple block
/// at `lambda = 1`: `T J_k = -eps conj(T)^t` with anti-diagonal
/// `T[i][k-1-i] = u (-1)^i i^(-m^2-k)`; free entries are set to zero.
fn solve_tilde_inverse(k: usize, u: Sign, eps: Sign) -> Result<Matrix> {
    let m = eps_exponent(eps);
    let corner = GaussianRational::i_pow(-m * m - k as i64);
    let j = jordan_block(k);
    let t = SymMatrix::unknown(k, k);
    let mut sys = LinearSystem::new(t.n_vars);
    let eq = t.mul_const_right(&j).sub(&t.conj().transpose().scale(&(-&eps.scalar())));
    sys.require_zero_matrix(&eq);
    for i in 0..k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let val = corner.scale(&Rational::from_integer((sign * u.as_i64()).into()));
        let e = t.at(i, k - 1 - i).sub(&crate::exact::linsolve::CLinExpr::constant(t.n_vars, &val));
        sys.require_zero_complex(&e);
    }
    let sol = sys.solve().map_err(|_| HvsError::ModelBlock(format!("tilde system inconsistent (k={k})")))?;
    Ok(instantiate(k, k, &sol.particular))
}

/// The simple model block `W^k_lambda(u)` at a quarter-turn angle: the
/// degenerate-form variant at `lambda = 1`, the non-degenerate one
/// otherwise.
pub fn block_w(k: usize, s: &AngleFraction, u: Sign, eps: Sign) -> Result<Hvs> {
    assert!(k >= 1);
    if !s.is_full_turn() {
        return block_v_circle(k, s, u, eps);
    }
    let t = solve_tilde_inverse(k, u, eps)?;
    let v = t.inverse().map_err(|_| HvsError::ModelBlock(format!("tilde inverse singular (k={k})")))?;
    let j = jordan_block(k);
    let b = &t * &(&j - &Matrix::identity(k));
    Ok(Hvs::new(eps, b, j, v))
}

/// The off-circle block pairing `lam` with `1/conj(lam)`, dimension `2k`.
pub fn block_offcircle(k: usize, lam: &GaussianRational, eps: Sign) -> Result<Hvs> {
    assert!(k >= 1);
    let n = lam.norm_sq();
    if lam.is_zero() || n >= Rational::one() {
        return Err(HvsError::BadOffCircleParameter);
    }
    let j = jordan_block(k);
    let mu = lam.conj().inv().map_err(HvsError::Exact)?;
    // (1/conj(lam)) * (J^t)^{-1}
    let jt_inv = j.transpose().inverse().map_err(HvsError::Exact)?;
    let top = j.scale(lam);
    let bottom = jt_inv.scale(&mu);
    let h = Matrix::block_diag(&[&top, &bottom]);
    let id = Matrix::identity(k);
    let zero = Matrix::zero(k, k);
    let b = Matrix::block_diag(&[&zero, &zero]);
    let mut b = b;
    for r in 0..k {
        for c in 0..k {
            *b.at_mut(r, k + c) = id.at(r, c).clone();
            *b.at_mut(k + r, c) = id.at(r, c).scale(&Rational::from_integer(eps.as_i64().into()));
        }
    }
    let v_tr = (&top - &id).scale(&eps.scalar());
    let v_bl = &bottom - &id;
    let mut v = Matrix::zero(2 * k, 2 * k);
    for r in 0..k {
        for c in 0..k {
            *v.at_mut(r, k + c) = v_tr.at(r, c).clone();
            *v.at_mut(k + r, c) = v_bl.at(r, c).clone();
        }
    }
    Ok(Hvs::new(eps, b, h, v))
}

/// Realification: a rational structure of twice the dimension whose
/// complexification is the block plus its conjugate.
pub fn realify_hvs(v: &Hvs) -> Hvs {
    Hvs::new(v.epsilon, v.b.realify(), v.h.realify(), v.v.realify())
}

/// The rational 2-dimensional structure with `h = I`, `V = 0` and a
/// symplectic form: the realification of the 1-dimensional non-degenerate
/// block at `lambda = 1`. These are the building blocks of the fixed part.
pub fn fix_quantum(eps: Sign) -> Result<Hvs> {
    let one = AngleFraction::from_ints(1, 1);
    Ok(realify_hvs(&block_v_circle(1, &one, Sign::Plus, eps)?))
}

/// The class of the complex-conjugate block: conjugation fixes `k`, sends
/// the angle `s` to `1 - s` and multiplies the sign by the parity of the
/// prescribed corner entry.
pub fn conjugate_class(k: usize, s: &AngleFraction, u: Sign) -> (AngleFraction, Sign) {
    conjugate_class_eps(k, s, u, Sign::Minus)
}

pub fn conjugate_class_eps(k: usize, s: &AngleFraction, u: Sign, eps: Sign) -> (AngleFraction, Sign) {
    let m = eps_exponent(eps);
    let exponent = if s.is_full_turn() {
        // tilde family: corner i^(-m^2-k)
        -m * m - k as i64
    } else {
        // form family: corner i^(-m^2-k+1)
        -m * m - k as i64 + 1
    };
    // conj(i^e) = (-1)^e i^e
    let flip = exponent.rem_euclid(2) == 1;
    let s_conj = s.conjugate();
    (s_conj, if flip { u.flip() } else { u })
}

/// Is the literal model block already rational (so a single copy exists over
/// `Q`)? Exactly when conjugation fixes both the angle and the sign.
pub fn is_self_conjugate(k: usize, s: &AngleFraction, u: Sign) -> bool {
    let (s2, u2) = conjugate_class(k, s, u);
    s2 == *s && u2 == u
}
