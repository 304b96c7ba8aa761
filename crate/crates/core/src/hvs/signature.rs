//! Signatures of variation structures on the unit circle: the hermitian
//! form `(1-z)V + (1-conj z)V^t`, its piecewise-constant profile, the
//! window-count identities linking it to the spectrum, and the exact
//! integer solve recovering a spectrum from sampled signatures.

use num_traits::{One, Zero};

use crate::exact::circle::{gap_sample_raw, root_angles, AngleFraction, UnitCirclePoint};
use crate::exact::cyclotomic::unit_circle_root_count;
use crate::exact::gaussian::GaussianRational;
use crate::exact::inertia::{hermitian_inertia, Inertia};
use crate::exact::linsolve::{LinExpr, LinearSystem};
use crate::exact::matrix::Matrix;
use crate::exact::rational::{is_integer, rat_int, Rational};
use crate::hvs::jordan::jordan_data;
use crate::hvs::spectrum::Spectrum;
use crate::hvs::structure::Hvs;
use crate::hvs::{HvsError, Result};

/// `(1-z) M + (1-conj z) M^t`.
pub fn twisted_form(m: &Matrix, z: &UnitCirclePoint) -> Matrix {
    let zg = z.to_gaussian();
    let one_minus = &GaussianRational::one() - &zg;
    let one_minus_conj = one_minus.conj();
    &m.scale(&one_minus) + &m.transpose().scale(&one_minus_conj)
}

/// Exact inertia of the twisted variation form at `z != 1`.
pub fn signature_at(v: &Hvs, z: &UnitCirclePoint) -> Result<Inertia> {
    if z.is_one() {
        return Err(HvsError::Exact(crate::exact::ExactError::UnitEvaluationPoint));
    }
    hermitian_inertia(&twisted_form(&v.v, z)).map_err(HvsError::Exact)
}

pub fn hvs_signature(v: &Hvs, z: &UnitCirclePoint) -> Result<i64> {
    Ok(signature_at(v, z)?.signature())
}

pub fn hvs_nullity(v: &Hvs, z: &UnitCirclePoint) -> Result<usize> {
    Ok(signature_at(v, z)?.n_zero)
}

/// Jump candidates: the angles of the root-of-unity eigenvalues of the
/// monodromy. Errors when the monodromy has unit-circle eigenvalues that
/// are not roots of unity (certified exactly); other off-circle eigenvalues
/// are fine, they never produce jumps.
pub fn jump_angles(v: &Hvs) -> Result<Vec<AngleFraction>> {
    let chi = crate::exact::poly::RatPoly::char_poly(&v.h).map_err(HvsError::Exact)?;
    let (factors, remainder) = crate::exact::cyclotomic::cyclotomic_split(&chi);
    if remainder.degree().unwrap_or(0) > 0
        && unit_circle_root_count(&remainder).map_err(HvsError::Exact)? > 0
    {
        return Err(HvsError::NonRootOfUnityEigenvalues);
    }
    let mut out: Vec<AngleFraction> = factors.iter().flat_map(|&(d, _)| root_angles(d)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// A piecewise-constant signature step function on the circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    /// Jump candidates, ascending in `(0, 1]`.
    pub jumps: Vec<AngleFraction>,
    /// One signature per open arc: `arc_values[i]` lives between `jumps[i]`
    /// and the next jump (circularly). With no jumps there is a single arc
    /// covering the whole circle.
    pub arc_values: Vec<i64>,
    /// Nullities on the same arcs.
    pub arc_nullities: Vec<usize>,
    /// `(signature, nullity)` at the jump itself, where the jump point lies
    /// in `Q(i)` and differs from 1; `None` otherwise.
    pub point_data: Vec<Option<(i64, usize)>>,
}

/// The open arcs `(lo, hi)` of the circle cut at the jump angles, as raw
/// bounds for [`gap_sample_raw`]; the arc after the last jump wraps through
/// the base point and is represented by `(last, 1)` (and `(0, first)` when
/// extra samples are requested).
fn arc_bounds(jumps: &[AngleFraction]) -> Vec<(Rational, Rational)> {
    if jumps.is_empty() {
        return vec![(Rational::zero(), Rational::one())];
    }
    let mut arcs = Vec::with_capacity(jumps.len());
    for (i, j) in jumps.iter().enumerate() {
        if i + 1 < jumps.len() {
            arcs.push((j.value().clone(), jumps[i + 1].value().clone()));
        } else if j.is_full_turn() {
            // wrap arc from the base point to the first jump
            arcs.push((Rational::zero(), jumps[0].value().clone()));
        } else {
            // wrap arc crosses the base point; the signature is continuous
            // there because 1 is not an eigenvalue (no jump at angle 1)
            arcs.push((j.value().clone(), Rational::one()));
        }
    }
    arcs
}

pub fn signature_profile(v: &Hvs) -> Result<SignatureProfile> {
    signature_profile_with_density(v, 1)
}

/// As [`signature_profile`], sampling `density` independent certified points
/// per arc and insisting they agree.
pub fn signature_profile_with_density(v: &Hvs, density: usize) -> Result<SignatureProfile> {
    if !v.is_rational() {
        return Err(HvsError::NotRational);
    }
    let density = density.max(1);
    let jumps = jump_angles(v)?;
    let arcs = arc_bounds(&jumps);
    let mut arc_values = Vec::with_capacity(arcs.len());
    let mut arc_nullities = Vec::with_capacity(arcs.len());
    for (lo, hi) in &arcs {
        let mut seen: Option<Inertia> = None;
        for piece in 0..density {
            // split the arc into `density` rational sub-ranges and sample each
            let width = hi - lo;
            let a = lo + &width * rat_int(piece as i64) / rat_int(density as i64);
            let b = lo + &width * rat_int(piece as i64 + 1) / rat_int(density as i64);
            let z = gap_sample_raw(&a, &b).map_err(HvsError::Exact)?;
            let inertia = signature_at(v, &z)?;
            match &seen {
                None => seen = Some(inertia),
                Some(prev) => {
                    if *prev != inertia {
                        return Err(HvsError::InvalidStructure(format!(
                            "signature not constant on arc ({lo}, {hi})"
                        )));
                    }
                }
            }
        }
        let inertia = seen.expect("density >= 1");
        arc_values.push(inertia.signature());
        arc_nullities.push(inertia.n_zero);
    }
    let mut point_data = Vec::with_capacity(jumps.len());
    for j in &jumps {
        let data = match j.exact_point() {
            Some(z) if !z.is_one() => {
                let inertia = signature_at(v, &z)?;
                Some((inertia.signature(), inertia.n_zero))
            }
            _ => None,
        };
        point_data.push(data);
    }
    Ok(SignatureProfile { jumps, arc_values, arc_nullities, point_data })
}

/// One verified window identity.
#[derive(Clone, Debug)]
pub struct SigSpecWindow {
    /// The gap `(lo, hi)` whose interior was sampled.
    pub gap: (Rational, Rational),
    pub inside_count: usize,
    pub inside_expected: Rational,
    pub outside_count: usize,
    pub outside_expected: Rational,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SigSpecReport {
    pub windows: Vec<SigSpecWindow>,
}

impl SigSpecReport {
    pub fn pass(&self) -> bool {
        self.windows.iter().all(|w| w.pass)
    }
}

/// Window-count identities between a simple structure's signatures and a
/// candidate spectrum: on every sampled gap `x`,
/// `|Sp inter (x, x+1)| = (dim - sigma)/2` and
/// `|Sp \ [x, x+1]| = (dim + sigma)/2`.
pub fn check_sigspec(v: &Hvs, sp: &Spectrum) -> Result<SigSpecReport> {
    if !v.is_rational() {
        return Err(HvsError::NotRational);
    }
    let dim = v.dim() as i64;
    let jumps = jump_angles(v)?;
    // breakpoints: jump angles plus spectrum shadows, inside (0,1)
    let mut cuts: Vec<Rational> = Vec::new();
    for j in &jumps {
        if !j.is_full_turn() {
            cuts.push(j.value().clone());
        }
    }
    for (alpha, _) in sp.iter() {
        if alpha < &Rational::one() {
            cuts.push(alpha.clone());
        } else if alpha > &Rational::one() && alpha < &rat_int(2) {
            cuts.push(alpha - Rational::one());
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut bounds = vec![Rational::zero()];
    bounds.extend(cuts);
    bounds.push(Rational::one());

    let mut report = SigSpecReport::default();
    for w in bounds.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a >= b {
            continue;
        }
        let z = gap_sample_raw(a, b).map_err(HvsError::Exact)?;
        let inertia = signature_at(v, &z)?;
        let sigma = inertia.signature();
        // the sampled angle x is irrational inside (a, b); spectrum entries
        // never hit {x, x+1}, and window membership is decided by the gap:
        // alpha in (x, x+1) iff alpha in (0,1) with alpha >= b, or alpha = 1,
        // or alpha in (1,2] with alpha - 1 <= a
        let mut inside = 0usize;
        let mut outside = 0usize;
        for (alpha, m) in sp.iter() {
            if alpha < &Rational::one() {
                if alpha >= b {
                    inside += m;
                } else if alpha <= a {
                    outside += m;
                }
            } else if alpha == &Rational::one() {
                inside += m;
            } else {
                let shifted = alpha - Rational::one();
                if &shifted <= a {
                    inside += m;
                } else if &shifted >= b {
                    outside += m;
                }
            }
        }
        let inside_expected = Rational::new((dim - sigma).into(), 2.into());
        let outside_expected = Rational::new((dim + sigma).into(), 2.into());
        let pass = rat_int(inside as i64) == inside_expected
            && rat_int(outside as i64) == outside_expected;
        report.windows.push(SigSpecWindow {
            gap: (a.clone(), b.clone()),
            inside_count: inside,
            inside_expected,
            outside_count: outside,
            outside_expected,
            pass,
        });
    }
    Ok(report)
}

/// Outcome of the exact integer solve for a spectrum.
#[derive(Clone, Debug)]
pub enum SpectrumSolveOutcome {
    Unique(Spectrum),
    /// The sampled signatures do not pin the spectrum; each direction lists
    /// the coefficient of every non-integral candidate angle.
    Underdetermined { directions: Vec<Vec<(AngleFraction, Rational)>> },
}

/// Recovers the spectrum of a simple rational structure with root-of-unity
/// monodromy from exact signature samples, given the integral multiplicities
/// at 1 and 2 (which signatures cannot see).
///
/// Equations: per sampled gap `x` of `(0,1)`,
/// `|Sp inter (x, x+1)| = (dim - sigma(x))/2`; per candidate angle the
/// dimension constraint `m(s) + m(s+1) = dim_s`; plus the symmetry
/// `m(alpha) = m(2 - alpha)` of real structures and the Jordan bounds.
pub fn spectrum_from_signatures(v: &Hvs, m1: usize, m2: usize) -> Result<SpectrumSolveOutcome> {
    if !v.is_rational() {
        return Err(HvsError::NotRational);
    }
    if !v.is_simple() {
        return Err(HvsError::NotSimple);
    }
    let jd = jordan_data(&v.h)?;
    if !jd.is_quasi_unipotent() {
        return Err(HvsError::NonRootOfUnityEigenvalues);
    }
    let dim = v.dim();
    let dim_unit = jd.dim_per_root(1);
    if m1 + m2 != dim_unit {
        return Err(HvsError::InconsistentSignatureData(format!(
            "integral multiplicities {m1}+{m2} != unit-eigenvalue dimension {dim_unit}"
        )));
    }

    // candidate fractional angles, ascending
    let mut angles: Vec<(AngleFraction, u64)> = Vec::new();
    for (&d, _) in jd.cyclotomic.iter() {
        if d == 1 {
            continue;
        }
        for s in root_angles(d) {
            angles.push((s, d));
        }
    }
    angles.sort();
    let n_vars = angles.len();
    let index_of = |s: &AngleFraction| angles.iter().position(|(a, _)| a == s).expect("candidate");

    let mut sys = LinearSystem::new(n_vars);
    // gap equations over (0, 1)
    let mut bounds = vec![Rational::zero()];
    bounds.extend(angles.iter().map(|(s, _)| s.value().clone()));
    bounds.push(Rational::one());
    for w in bounds.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a >= b {
            continue;
        }
        let z = gap_sample_raw(a, b).map_err(HvsError::Exact)?;
        let inertia = signature_at(v, &z)?;
        if inertia.n_zero != 0 {
            return Err(HvsError::UnexpectedNullity);
        }
        let count = dim as i64 - inertia.signature();
        if count % 2 != 0 {
            return Err(HvsError::InconsistentSignatureData("odd window count".into()));
        }
        // sum_{s >= b} m(s) + sum_{s <= a} (dim_s - m(s)) + m1 = count/2
        let mut expr = LinExpr::constant(n_vars, rat_int(m1 as i64) - rat_int(count / 2));
        for (i, (s, d)) in angles.iter().enumerate() {
            let dim_s = jd.dim_per_root(*d) as i64;
            if s.value() >= b {
                expr = expr.add(&LinExpr::var(n_vars, i));
            } else if s.value() <= a {
                expr = expr.add(&LinExpr::constant(n_vars, rat_int(dim_s)));
                expr = expr.sub(&LinExpr::var(n_vars, i));
            }
        }
        sys.require_zero(&expr);
    }
    // symmetry m(s) = m(2 - s) = dim_{1-s} - m(1-s)
    for (i, (s, _)) in angles.iter().enumerate() {
        let conj = s.conjugate();
        let j = index_of(&conj);
        let dim_conj = jd.dim_per_root(angles[j].1) as i64;
        let expr = LinExpr::var(n_vars, i)
            .add(&LinExpr::var(n_vars, j))
            .sub(&LinExpr::constant(n_vars, rat_int(dim_conj)));
        sys.require_zero(&expr);
    }
    let sol = sys
        .solve()
        .map_err(|_| HvsError::InconsistentSignatureData("gap equations are inconsistent".into()))?;
    if !sol.nullspace.is_empty() {
        let directions = sol
            .nullspace
            .iter()
            .map(|dir| {
                angles
                    .iter()
                    .zip(dir)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((s, _), c)| (s.clone(), c.clone()))
                    .collect()
            })
            .collect();
        return Ok(SpectrumSolveOutcome::Underdetermined { directions });
    }

    // integrality and Jordan bounds
    let mut sp = Spectrum::new();
    sp.insert(rat_int(1), m1)?;
    sp.insert(rat_int(2), m2)?;
    for (i, (s, d)) in angles.iter().enumerate() {
        let x = &sol.particular[i];
        if !is_integer(x) {
            return Err(HvsError::InconsistentSignatureData(format!(
                "multiplicity at {s} is not an integer: {x}"
            )));
        }
        let sizes = jd.cyclotomic.get(d).expect("candidate order");
        let lo: i64 = sizes.iter().map(|&(k, c)| (k as i64 / 2) * c as i64).sum();
        let hi: i64 = sizes.iter().map(|&(k, c)| ((k as i64 + 1) / 2) * c as i64).sum();
        let dim_s = jd.dim_per_root(*d) as i64;
        let m_low = x.to_integer();
        let m_s_plus_one = num_bigint::BigInt::from(dim_s) - &m_low;
        let within = |m: &num_bigint::BigInt| m >= &lo.into() && m <= &hi.into();
        if !within(&m_low) || !within(&m_s_plus_one) {
            return Err(HvsError::InconsistentSignatureData(format!(
                "multiplicity at {s} violates the Jordan bounds [{lo}, {hi}]"
            )));
        }
        use num_traits::ToPrimitive;
        sp.insert(s.value().clone(), m_low.to_usize().unwrap())?;
        sp.insert(s.value() + Rational::one(), m_s_plus_one.to_usize().unwrap())?;
    }
    Ok(SpectrumSolveOutcome::Unique(sp))
}
