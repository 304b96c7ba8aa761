//! Rational points on the unit circle and exact angle arithmetic.
//!
//! Angles are fractions of a full turn. A rational circle point other than
//! `(1,0)`, `(0,1)`, `(-1,0)`, `(0,-1)` has an irrational angle, so the
//! comparison of a point's angle with a rational angle is always strict and
//! can be decided exactly: square the point (doubling its angle) until the
//! two angles land in different half circles.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

use super::gaussian::GaussianRational;
use super::rational::{format_rational, parse_rational, rat, rat_int, Rational};
use super::{ExactError, Result};

/// An angle `s` in `(0, 1]`, standing for the root of unity `e^{2 pi i s}`.
/// The full turn is stored as `1`, so `s = 1` means the point `(1, 0)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleFraction(Rational);

impl AngleFraction {
    /// Normalises any rational into `(0, 1]` modulo a full turn.
    pub fn new(r: Rational) -> Self {
        let mut v = &r - r.floor();
        if v.is_zero() {
            v = Rational::one();
        }
        AngleFraction(v)
    }

    pub fn from_ints(num: i64, den: i64) -> Self {
        AngleFraction::new(rat(num, den))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Does this angle name the root of unity 1?
    pub fn is_full_turn(&self) -> bool {
        self.0.is_one()
    }

    /// The conjugate angle `1 - s` (with `1` fixed).
    pub fn conjugate(&self) -> AngleFraction {
        AngleFraction::new(rat_int(1) - &self.0)
    }

    /// The denominator `d` of `s = j/d` in lowest terms: the order of the
    /// root of unity.
    pub fn order(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.0.denom().to_u64().expect("angle denominator fits in u64")
    }

    /// The exact circle point when the angle is a multiple of a quarter
    /// turn, `None` otherwise.
    pub fn exact_point(&self) -> Option<UnitCirclePoint> {
        let v = &self.0;
        if v == &rat(1, 4) {
            Some(UnitCirclePoint::from_ints(0, 1))
        } else if v == &rat(1, 2) {
            Some(UnitCirclePoint::from_ints(-1, 0))
        } else if v == &rat(3, 4) {
            Some(UnitCirclePoint::from_ints(0, -1))
        } else if v.is_one() {
            Some(UnitCirclePoint::from_ints(1, 0))
        } else {
            None
        }
    }

    /// The root of unity as a Gaussian rational, when it lies in `Q(i)`.
    pub fn unit_scalar(&self) -> Option<GaussianRational> {
        self.exact_point().map(|p| GaussianRational::new(p.re, p.im))
    }
}

impl fmt::Display for AngleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Debug for AngleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for AngleFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for AngleFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(AngleFraction::new(parse_rational(&s).map_err(de::Error::custom)?))
    }
}

/// A point `(re, im)` with `re^2 + im^2 = 1` exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnitCirclePoint {
    pub re: Rational,
    pub im: Rational,
}

impl UnitCirclePoint {
    pub fn new(re: Rational, im: Rational) -> Result<Self> {
        if &re * &re + &im * &im != Rational::one() {
            return Err(ExactError::OffCircle);
        }
        Ok(UnitCirclePoint { re, im })
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        UnitCirclePoint::new(rat_int(re), rat_int(im)).expect("integer circle point")
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> UnitCirclePoint {
        UnitCirclePoint { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Complex square; doubles the angle exactly.
    pub fn square(&self) -> UnitCirclePoint {
        UnitCirclePoint {
            re: &self.re * &self.re - &self.im * &self.im,
            im: rat_int(2) * &self.re * &self.im,
        }
    }

    pub fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), self.im.clone())
    }
}

impl fmt::Debug for UnitCirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.re), format_rational(&self.im))
    }
}

impl Serialize for UnitCirclePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("UnitCirclePoint", 2)?;
        st.serialize_field("im", &format_rational(&self.im))?;
        st.serialize_field("re", &format_rational(&self.re))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for UnitCirclePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: String,
            im: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let re = parse_rational(&raw.re).map_err(de::Error::custom)?;
        let im = parse_rational(&raw.im).map_err(de::Error::custom)?;
        UnitCirclePoint::new(re, im).map_err(de::Error::custom)
    }
}

/// Tangent-half-angle parametrisation `t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))`;
/// `t = 0` maps to `(1, 0)`.
pub fn circle_point(t: &Rational) -> UnitCirclePoint {
    let t2 = t * t;
    let denom = &t2 + Rational::one();
    UnitCirclePoint {
        re: (Rational::one() - &t2) / denom.clone(),
        im: rat_int(2) * t / denom,
    }
}

/// Monotone chart covering angles `(0, 1)`: `t -> -circle_point(t)`, whose
/// angle is `1/2 + atan(t)/pi`.
fn chart(t: &Rational) -> UnitCirclePoint {
    let p = circle_point(t);
    UnitCirclePoint { re: -p.re, im: -p.im }
}

/// Angle of a rational circle point, in `(0, 1]` with `(1,0)` mapped to `1`,
/// compared exactly against a rational angle `s` in `(0, 1]`.
pub fn cmp_angle(z: &UnitCirclePoint, s: &Rational) -> Result<Ordering> {
    assert!(s > &Rational::zero() && s <= &Rational::one(), "angle out of (0,1]");
    let mut z = z.clone();
    let mut s = s.clone();
    let mut flipped = false;
    let half = rat(1, 2);
    for _ in 0..MAX_ANGLE_ITERS {
        // axis points have rational angles: compare directly
        let axis = if z.im.is_zero() {
            Some(if z.re.is_one() { Rational::one() } else { half.clone() })
        } else if z.re.is_zero() {
            Some(if z.im.is_one() { rat(1, 4) } else { rat(3, 4) })
        } else {
            None
        };
        if let Some(theta) = axis {
            let ord = theta.cmp(&s);
            return Ok(if flipped { ord.reverse() } else { ord });
        }
        // now the angle of z is irrational, inside (0,1) and off the axes
        if s.is_one() {
            return Ok(orient(Ordering::Less, flipped));
        }
        if z.im.is_positive() {
            // angle in (0, 1/2)
            if s >= half {
                return Ok(orient(Ordering::Less, flipped));
            }
            z = z.square();
            s = &s + &s;
        } else {
            // angle in (1/2, 1)
            if s <= half {
                return Ok(orient(Ordering::Greater, flipped));
            }
            z = z.conj();
            s = Rational::one() - s;
            flipped = !flipped;
        }
    }
    Err(ExactError::IterationLimit("cmp_angle"))
}

const MAX_ANGLE_ITERS: usize = 4096;
const MAX_BISECT_ITERS: usize = 20_000;

fn orient(o: Ordering, flipped: bool) -> Ordering {
    if flipped {
        o.reverse()
    } else {
        o
    }
}

/// A certified rational circle point with angle strictly inside the arc
/// `(s1, s2)`. Accepts `s1 = 1` as the base point (angle 0).
pub fn gap_sample(s1: &AngleFraction, s2: &AngleFraction) -> Result<UnitCirclePoint> {
    let lo = if s1.is_full_turn() { Rational::zero() } else { s1.value().clone() };
    gap_sample_raw(&lo, s2.value())
}

/// Core sampler on raw bounds `0 <= lo < hi <= 1`.
pub fn gap_sample_raw(lo: &Rational, hi: &Rational) -> Result<UnitCirclePoint> {
    if !(lo < hi && !lo.is_negative() && hi <= &Rational::one()) {
        return Err(ExactError::EmptyArc);
    }
    // prefer an exact axis point when one lies inside
    for (num, den, x, y) in [(1i64, 4i64, 0i64, 1i64), (1, 2, -1, 0), (3, 4, 0, -1)] {
        let m = rat(num, den);
        if lo < &m && &m < hi {
            return Ok(UnitCirclePoint::from_ints(x, y));
        }
    }
    let inside = |p: &UnitCirclePoint| -> Result<bool> {
        let above_lo = lo.is_zero() || cmp_angle(p, lo)? == Ordering::Greater;
        let below_hi = hi.is_one() || cmp_angle(p, hi)? == Ordering::Less;
        Ok(above_lo && below_hi)
    };
    // the chart t -> angle(1/2 + atan(t)/pi) is monotone over (0,1); find a
    // bracket [t_lo, t_hi] whose angles surround the arc. With lo = 0 (or
    // hi = 1) there is no angle at or below lo (above hi), so the bracket
    // only has to reach below hi (above lo).
    let mut t_lo = -Rational::one();
    {
        let mut guard = 0;
        loop {
            let ok = if lo.is_zero() {
                cmp_angle(&chart(&t_lo), hi)? == Ordering::Less
            } else {
                cmp_angle(&chart(&t_lo), lo)? != Ordering::Greater
            };
            if ok {
                break;
            }
            t_lo = &t_lo + &t_lo;
            guard += 1;
            if guard > MAX_BISECT_ITERS {
                return Err(ExactError::IterationLimit("gap_sample bracket"));
            }
        }
    }
    let mut t_hi = Rational::one();
    {
        let mut guard = 0;
        loop {
            let ok = if hi.is_one() {
                cmp_angle(&chart(&t_hi), lo)? == Ordering::Greater
            } else {
                cmp_angle(&chart(&t_hi), hi)? != Ordering::Less
            };
            if ok {
                break;
            }
            t_hi = &t_hi + &t_hi;
            guard += 1;
            if guard > MAX_BISECT_ITERS {
                return Err(ExactError::IterationLimit("gap_sample bracket"));
            }
        }
    }
    for _ in 0..MAX_BISECT_ITERS {
        let mid = (&t_lo + &t_hi) / rat_int(2);
        let p = chart(&mid);
        if inside(&p)? {
            return Ok(p);
        }
        if !lo.is_zero() && cmp_angle(&p, lo)? != Ordering::Greater {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    Err(ExactError::IterationLimit("gap_sample bisection"))
}

/// The angles `j/d` with `gcd(j, d) = 1`: the primitive d-th roots of unity,
/// ascending. `d = 1` gives `[1]` (the point 1 itself).
pub fn root_angles(d: u64) -> Vec<AngleFraction> {
    assert!(d >= 1);
    (1..=d)
        .filter(|j| j.gcd(&d) == 1)
        .map(|j| AngleFraction::new(rat(j as i64, d as i64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_point_examples() {
        assert_eq!(circle_point(&rat_int(1)), UnitCirclePoint::from_ints(0, 1));
        assert_eq!(circle_point(&rat_int(0)), UnitCirclePoint::from_ints(1, 0));
        let p = circle_point(&rat(1, 2));
        assert_eq!((p.re, p.im), (rat(3, 5), rat(4, 5)));
    }

    #[test]
    fn root_angle_examples() {
        let a = |n, d| AngleFraction::from_ints(n, d);
        assert_eq!(root_angles(1), vec![a(1, 1)]);
        assert_eq!(root_angles(4), vec![a(1, 4), a(3, 4)]);
        assert_eq!(root_angles(6), vec![a(1, 6), a(5, 6)]);
    }

    #[test]
    fn angle_comparison() {
        // (3/5, 4/5) has angle ~ 0.1476
        let p = circle_point(&rat(1, 2));
        assert_eq!(cmp_angle(&p, &rat(1, 4)).unwrap(), Ordering::Less);
        assert_eq!(cmp_angle(&p, &rat(1, 8)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_angle(&p, &rat(1, 7)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_angle(&p, &rat(1, 6)).unwrap(), Ordering::Less);
        // axis points compare exactly
        let m = UnitCirclePoint::from_ints(-1, 0);
        assert_eq!(cmp_angle(&m, &rat(1, 2)).unwrap(), Ordering::Equal);
        assert_eq!(cmp_angle(&UnitCirclePoint::from_ints(1, 0), &rat(1, 3)).unwrap(), Ordering::Greater);
        // conjugate has angle 1 - theta
        let q = p.conj();
        assert_eq!(cmp_angle(&q, &rat(6, 7)).unwrap(), Ordering::Less);
        assert_eq!(cmp_angle(&q, &rat(5, 6)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn gap_sample_examples() {
        let a = |n, d| AngleFraction::from_ints(n, d);
        assert_eq!(gap_sample(&a(1, 4), &a(3, 4)).unwrap(), UnitCirclePoint::from_ints(-1, 0));
        // lower endpoint "1" means the base point: the arc (0, 1/2)
        assert_eq!(gap_sample(&a(1, 1), &a(1, 2)).unwrap(), UnitCirclePoint::from_ints(0, 1));
        // a tight arc certifies by bisection
        let z = gap_sample(&a(1, 3), &a(1, 2)).unwrap();
        assert_eq!(&z.re * &z.re + &z.im * &z.im, Rational::one());
        assert_eq!(cmp_angle(&z, &rat(1, 3)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_angle(&z, &rat(1, 2)).unwrap(), Ordering::Less);
        // empty arc rejected
        assert!(gap_sample(&a(1, 2), &a(1, 2)).is_err());
    }

    #[test]
    fn gap_sample_wrap_and_edges() {
        // arc (7/8, 1): strictly between the last jump and the base point
        let z = gap_sample_raw(&rat(7, 8), &rat_int(1)).unwrap();
        assert_eq!(cmp_angle(&z, &rat(7, 8)).unwrap(), Ordering::Greater);
        assert!(!z.is_one());
        // arc (0, 1/8)
        let w = gap_sample_raw(&rat(0, 1), &rat(1, 8)).unwrap();
        assert_eq!(cmp_angle(&w, &rat(1, 8)).unwrap(), Ordering::Less);
    }
}
