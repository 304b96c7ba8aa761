//! Gaussian rationals `Q(i)`: the scalar field of every form, monodromy and
//! variation operator in this crate.

use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{format_rational, parse_rational, rat_int, Rational};
use super::{ExactError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    /// `i^e` for any integer exponent.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -&Self::one(),
            _ => -&Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`, the square of the complex modulus.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }

    /// Canonical string form: `"p/q"`, `"r/s*i"` or `"p/q+r/s*i"` /
    /// `"p/q-r/s*i"`. Bit-exact round trip with [`parse_gaussian`].
    pub fn to_wire(&self) -> String {
        if self.im.is_zero() {
            return format_rational(&self.re);
        }
        let im_part = format!("{}*i", format_rational(&self.im.clone().abs()));
        let im_signed = if self.im < Rational::zero() {
            format!("-{im_part}")
        } else {
            im_part
        };
        if self.re.is_zero() {
            im_signed
        } else if self.im < Rational::zero() {
            format!("{}{}", format_rational(&self.re), im_signed)
        } else {
            format!("{}+{}", format_rational(&self.re), im_signed)
        }
    }
}

/// Parses the forms emitted by [`GaussianRational::to_wire`], plus bare `i`,
/// `-i` and an explicit `a+b*i` with either sign.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(ExactError::Parse("empty scalar".into()));
    }
    if let Some(body) = t.strip_suffix("*i") {
        // find a +/- splitting real and imaginary parts (not at position 0,
        // not part of the exponent-free rational syntax)
        if let Some(pos) = split_sign_position(body) {
            let (re_s, im_s) = body.split_at(pos);
            let re = parse_rational(re_s)?;
            let im = parse_rational(im_s)?;
            return Ok(GaussianRational::new(re, im));
        }
        return Ok(GaussianRational::new(Rational::zero(), parse_rational(body)?));
    }
    if t == "i" {
        return Ok(GaussianRational::i());
    }
    if t == "-i" {
        return Ok(-&GaussianRational::i());
    }
    Ok(GaussianRational::from_rational(parse_rational(&t)?))
}

/// Position of the sign separating `re` from `im` in `a+b` / `a-b`, if any.
fn split_sign_position(body: &str) -> Option<usize> {
    body.char_indices()
        .rev()
        .find(|&(idx, c)| (c == '+' || c == '-') && idx != 0 && !matches!(&body[idx - 1..idx], "/"))
        .map(|(idx, _)| idx)
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_wire())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_gaussian(&s).map_err(de::Error::custom)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn arithmetic_and_inverse() {
        let z = GaussianRational::new(rat(1, 2), rat(-1, 3));
        let w = &z * &z.inv().unwrap();
        assert_eq!(w, GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_err());
    }

    #[test]
    fn i_powers() {
        assert_eq!(GaussianRational::i_pow(-1), -&GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(-2), -&GaussianRational::one());
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), GaussianRational::i_pow(2));
    }

    #[test]
    fn wire_round_trip() {
        let cases = [
            GaussianRational::from_int(0),
            GaussianRational::from_int(-3),
            GaussianRational::new(rat(3, 4), rat(0, 1)),
            GaussianRational::new(rat(0, 1), rat(-1, 2)),
            GaussianRational::new(rat(-1, 2), rat(7, 5)),
            GaussianRational::new(rat(1, 2), rat(-7, 5)),
        ];
        for z in cases {
            let s = z.to_wire();
            assert_eq!(parse_gaussian(&s).unwrap(), z, "wire {s}");
        }
        assert_eq!(parse_gaussian("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_gaussian("1/2 + 1/3*i").unwrap(), GaussianRational::new(rat(1, 2), rat(1, 3)));
    }
}
