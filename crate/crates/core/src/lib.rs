//! Exact-arithmetic invariants of hermitian variation structures and
//! fractured Seifert forms.
//!
//! Everything in this crate computes over `Q` and `Q(i)`: no floating point
//! enters any certified path. The crate is organised in four layers:
//!
//! * [`exact`] - rationals, Gaussian rationals, dense matrices, characteristic
//!   polynomials, cyclotomic factorisation, exact hermitian inertia and
//!   certified points on the unit circle;
//! * [`hvs`] - hermitian variation structures: axioms, model blocks, direct
//!   sums and splitting, Jordan data, spectra and signature profiles;
//! * [`seifert`] - fractured Seifert data of simple fibred links: the
//!   fractured/mended dictionary, validity checks, the twist test and
//!   plumbing-graph invariants;
//! * [`cobordism`] - Murasugi-type signature bounds and the two
//!   spectrum-semicontinuity checkers.
//!
//! [`json`] carries the wire formats used by the `hvs` CLI; scalars are
//! always strings (`"3/4"`, `"1/2-1/3*i"`), never floats.

pub mod cobordism;
pub mod exact;
pub mod hvs;
pub mod json;
pub mod seifert;

pub use exact::circle::{circle_point, gap_sample, root_angles, AngleFraction, UnitCirclePoint};
pub use exact::gaussian::GaussianRational;
pub use exact::inertia::{hermitian_inertia, Inertia};
pub use exact::matrix::Matrix;
pub use exact::poly::RatPoly;
pub use exact::rational::Rational;
pub use hvs::spectrum::{BlockSpec, Spectrum};
pub use hvs::structure::{Hvs, Sign};
