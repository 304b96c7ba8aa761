//! Data carried by a fibred link and by its fractured Seifert form.

use crate::exact::matrix::Matrix;
use crate::hvs::structure::{Hvs, Sign};
use crate::seifert::{Result, SeifertError};

/// The homological data of a fibred link: monodromy `h`, intersection form
/// `b` and variation operator `Var` on the first homology of the fiber,
/// together with the number of link components. The triple with `epsilon`
/// is itself a variation structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibredLinkData {
    pub epsilon: Sign,
    pub n: usize,
    pub h: Matrix,
    pub b: Matrix,
    pub var: Matrix,
}

impl FibredLinkData {
    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    pub fn as_hvs(&self) -> Hvs {
        Hvs::new(self.epsilon, self.b.clone(), self.h.clone(), self.var.clone())
    }

    /// Structure identities plus rationality; the entry point of every
    /// fibred-link operation.
    pub fn validate(&self) -> Result<()> {
        if !self.as_hvs().is_rational() {
            return Err(SeifertError::InvalidStructure("entries must be rational".into()));
        }
        let report = crate::hvs::structure::validate_hvs(&self.as_hvs())?;
        if !report.pass() {
            let names: Vec<&str> = report.violations.iter().map(|v| v.axiom.label()).collect();
            return Err(SeifertError::InvalidStructure(names.join("; ")));
        }
        Ok(())
    }
}

/// The fractured Seifert data extracted from a fibred link: a basis of the
/// subspace `U` (the image of the variation operator inside the fiber
/// homology), the fractured Seifert matrix `S` on it (a form matrix:
/// `S(x, y) = x^t S y` in the basis), and the restrictions of monodromy and
/// intersection form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracturedData {
    pub n: usize,
    pub c_gamma: usize,
    pub g_gamma: usize,
    pub dim_u: usize,
    /// Columns span `U` inside the ambient homology.
    pub basis: Matrix,
    /// Fractured Seifert matrix on `U`, rational and non-degenerate for
    /// simple links.
    pub s: Matrix,
    pub h_res: Matrix,
    pub b_res: Matrix,
}

impl FracturedData {
    /// The fractured variation structure `(U; b_res, h_res, (S^t)^{-1})`.
    pub fn fractured_hvs(&self, epsilon: Sign) -> Result<Hvs> {
        let v = self
            .s
            .transpose()
            .inverse()
            .map_err(|_| SeifertError::DegenerateFractured)?;
        Ok(Hvs::new(epsilon, self.b_res.clone(), self.h_res.clone(), v))
    }
}

/// Bases (as column spans in the ambient homology) of the five subspaces
/// cutting the fiber homology: the non-unit eigenspaces, the image and
/// boundary parts of `U`, the preimage space pairing with the image part,
/// and the fixed part carrying the non-degenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceDecomposition {
    pub u_neq1: Matrix,
    pub u_im: Matrix,
    pub u_bnd: Matrix,
    pub u_b: Matrix,
    pub u_fix: Matrix,
}

impl SubspaceDecomposition {
    pub fn dims(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.u_neq1.cols(),
            self.u_im.cols(),
            self.u_bnd.cols(),
            self.u_b.cols(),
            self.u_fix.cols(),
        )
    }

    /// The concatenated basis of `U = U_neq1 + U_im + U_bnd`.
    pub fn u_sigma(&self) -> Matrix {
        self.u_neq1.hstack(&self.u_im).hstack(&self.u_bnd)
    }
}
