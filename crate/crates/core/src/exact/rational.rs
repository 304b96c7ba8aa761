//! Arbitrary-precision rationals. `BigRational` already keeps values reduced
//! with a positive denominator, which is exactly the normal form we need.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use super::{ExactError, Result};

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational; panics on `d = 0` (test/fixture helper).
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Floor of a rational as a BigInt.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Parses `"p/q"` or `"p"`; whitespace is trimmed.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ExactError::Parse("empty rational".into()));
    }
    Rational::from_str(t).map_err(|e| ExactError::Parse(format!("bad rational {t:?}: {e}")))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter serialising rationals as canonical strings; use with
/// `#[serde(with = "serde_rat")]`.
pub mod serde_rat {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(de::Error::custom)
    }
}

/// Sign of a rational as -1, 0, +1.
pub fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let r = rat(2, -4);
        assert_eq!(format_rational(&r), "-1/2");
        assert!(r.denom().is_positive());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
