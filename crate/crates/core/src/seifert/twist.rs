//! The analyticity (twist) test: with `N` the order of the semisimple part
//! of the monodromy, the quadratic form of `b^t (h^N - I)` must be negative
//! semi-definite. The two-dimensional unipotent blocks show why this pins
//! signs: the form evaluates to `diag(0, -u)` on the sign-`u` block, so only
//! `+1` survives.

use crate::exact::inertia::congruence_diagonalize;
use crate::exact::matrix::Matrix;
use crate::exact::rational::sign_of;
use crate::hvs::jordan::jordan_data;
use crate::seifert::data::FibredLinkData;
use crate::seifert::{Result, SeifertError};

#[derive(Clone, Debug)]
pub struct TwistReport {
    /// The order `N` of the semisimple part of the monodromy.
    pub order: u64,
    pub pass: bool,
    /// A vector with strictly positive twist when the test fails.
    pub witness: Option<Matrix>,
}

pub fn twist_check(fl: &FibredLinkData) -> Result<TwistReport> {
    fl.validate()?;
    let jd = jordan_data(&fl.h)?;
    if !jd.is_quasi_unipotent() {
        return Err(SeifertError::NonRootOfUnity);
    }
    let order = jd.order();
    let power = fl.h.pow(order).map_err(SeifertError::Exact)?;
    let m = &fl.b.transpose() * &(&power - &Matrix::identity(fl.dim()));
    let quad = &m + &m.transpose();
    let (diag, basis) = congruence_diagonalize(&quad).map_err(SeifertError::Exact)?;
    let positive = diag.iter().position(|d| sign_of(d) > 0);
    Ok(TwistReport {
        order,
        pass: positive.is_none(),
        witness: positive.map(|i| basis.column(i)),
    })
}
