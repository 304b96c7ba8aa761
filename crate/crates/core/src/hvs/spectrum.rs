//! Spectra (finite multisets of rationals in `(0, 2]`) and their computation
//! from classified block data.

use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::circle::AngleFraction;
use crate::exact::gaussian::GaussianRational;
use crate::exact::rational::{format_rational, is_integer, parse_rational, rat_int, Rational};
use crate::hvs::structure::Sign;
use crate::hvs::{HvsError, Result};

/// A finite multiset of rationals in `(0, 2]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Spectrum {
    counts: BTreeMap<Rational, usize>,
}

impl Spectrum {
    pub fn new() -> Self {
        Spectrum::default()
    }

    pub fn insert(&mut self, alpha: Rational, mult: usize) -> Result<()> {
        if alpha <= Rational::zero() || alpha > rat_int(2) {
            return Err(HvsError::SpectrumRange);
        }
        if mult > 0 {
            *self.counts.entry(alpha).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn multiplicity(&self, alpha: &Rational) -> usize {
        self.counts.get(alpha).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.counts.iter().map(|(a, &m)| (a, m))
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut out = self.clone();
        for (a, m) in other.iter() {
            *out.counts.entry(a.clone()).or_insert(0) += m;
        }
        out
    }

    /// Entries expanded with multiplicity, ascending.
    pub fn entries(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.total());
        for (a, m) in self.iter() {
            out.extend(std::iter::repeat_with(|| a.clone()).take(m));
        }
        out
    }

    /// `|Sp inter (x, x+1)|` for a rational window base.
    pub fn count_in_open_window(&self, x: &Rational) -> usize {
        let hi = x + Rational::one();
        self.iter().filter(|(a, _)| *a > x && *a < &hi).map(|(_, m)| m).sum()
    }

    /// `|Sp \ [x, x+1]|` for a rational window base.
    pub fn count_outside_closed_window(&self, x: &Rational) -> usize {
        let hi = x + Rational::one();
        self.iter().filter(|(a, _)| *a < x || *a > &hi).map(|(_, m)| m).sum()
    }

    /// Is the multiset symmetric about 1 away from the integers?
    pub fn non_integral_symmetric_about_one(&self) -> bool {
        self.iter().all(|(a, m)| {
            if is_integer(a) {
                true
            } else {
                self.multiplicity(&(rat_int(2) - a)) == m
            }
        })
    }

    /// Multiplicities at 1 and 2.
    pub fn integral_multiplicities(&self) -> (usize, usize) {
        (self.multiplicity(&rat_int(1)), self.multiplicity(&rat_int(2)))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries().iter().map(format_rational).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<String> = self.entries().iter().map(format_rational).collect();
        items.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        let mut sp = Spectrum::new();
        for s in items {
            let a = parse_rational(&s).map_err(de::Error::custom)?;
            sp.insert(a, 1).map_err(de::Error::custom)?;
        }
        Ok(sp)
    }
}

/// One classified circle block `(k, s, u)` with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleBlock {
    pub k: usize,
    pub s: AngleFraction,
    pub u: Sign,
    pub mult: usize,
}

/// One off-circle block `(k, lam)` with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffCircleBlock {
    pub k: usize,
    pub lam: GaussianRational,
    pub mult: usize,
}

/// A classified multiset of indecomposable blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub epsilon: Sign,
    #[serde(default)]
    pub circle: Vec<CircleBlock>,
    #[serde(default)]
    pub offcircle: Vec<OffCircleBlock>,
}

impl BlockSpec {
    pub fn circle_only(epsilon: Sign, circle: Vec<CircleBlock>) -> Self {
        BlockSpec { epsilon, circle, offcircle: Vec::new() }
    }

    /// Total dimension of the circle part.
    pub fn circle_dim(&self) -> usize {
        self.circle.iter().map(|b| b.k * b.mult).sum()
    }

    /// Canonical form: sorted, duplicates merged, zero multiplicities gone.
    pub fn canonical(&self) -> BlockSpec {
        let mut circle: BTreeMap<(usize, Rational, i64), usize> = BTreeMap::new();
        for b in &self.circle {
            if b.mult > 0 {
                *circle.entry((b.k, b.s.value().clone(), b.u.as_i64())).or_insert(0) += b.mult;
            }
        }
        let mut off: BTreeMap<(usize, (Rational, Rational)), usize> = BTreeMap::new();
        for b in &self.offcircle {
            if b.mult > 0 {
                *off.entry((b.k, (b.lam.re.clone(), b.lam.im.clone()))).or_insert(0) += b.mult;
            }
        }
        BlockSpec {
            epsilon: self.epsilon,
            circle: circle
                .into_iter()
                .map(|((k, s, u), mult)| CircleBlock {
                    k,
                    s: AngleFraction::new(s),
                    u: Sign::from_i64(u).unwrap(),
                    mult,
                })
                .collect(),
            offcircle: off
                .into_iter()
                .map(|((k, (re, im)), mult)| OffCircleBlock {
                    k,
                    lam: GaussianRational::new(re, im),
                    mult,
                })
                .collect(),
        }
    }
}

/// Contribution of a single block `(k, u)` to the spectrum multiplicity at a
/// candidate `alpha` whose integer part has the given parity
/// (`floor_even = true` for `floor(alpha)` even, with the standard floor:
/// `floor(1) = 1`, `floor(2) = 2`).
fn block_contribution(k: usize, u: Sign, floor_even: bool) -> usize {
    if k % 2 == 0 {
        k / 2
    } else {
        let parity = if floor_even { 1 } else { -1 };
        // (k - u * (-1)^{floor(alpha)}) / 2
        ((k as i64 - u.as_i64() * parity) / 2) as usize
    }
}

/// The two candidates `alpha` in `(0, 2]` with `e^{2 pi i alpha} = e^{2 pi i s}`,
/// each with the parity of its integer part.
fn candidates(s: &AngleFraction) -> [(Rational, bool); 2] {
    let v = s.value().clone();
    if s.is_full_turn() {
        // alpha = 1 (floor odd), alpha = 2 (floor even)
        [(rat_int(1), false), (rat_int(2), true)]
    } else {
        // alpha = s in (0,1) (floor 0, even), alpha = s+1 in (1,2) (floor odd)
        [(v.clone(), true), (v + Rational::one(), false)]
    }
}

/// Spectrum of a classified multiset of circle blocks.
pub fn spectrum_from_blocks(spec: &BlockSpec) -> Result<Spectrum> {
    if !spec.offcircle.is_empty() {
        return Err(HvsError::OffCircleBlocksPresent);
    }
    let mut sp = Spectrum::new();
    for b in &spec.circle {
        for (alpha, floor_even) in candidates(&b.s) {
            let m = block_contribution(b.k, b.u, floor_even) * b.mult;
            sp.insert(alpha, m)?;
        }
    }
    Ok(sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn block(k: usize, n: i64, d: i64, u: Sign, mult: usize) -> CircleBlock {
        CircleBlock { k, s: AngleFraction::from_ints(n, d), u, mult }
    }

    fn sp(entries: &[(i64, i64)]) -> Spectrum {
        let mut s = Spectrum::new();
        for &(n, d) in entries {
            s.insert(rat(n, d), 1).unwrap();
        }
        s
    }

    #[test]
    fn unit_blocks() {
        // {(k=1, lambda=1, u=+1)} -> {1}
        let s1 = spectrum_from_blocks(&BlockSpec::circle_only(
            Sign::Minus,
            vec![block(1, 1, 1, Sign::Plus, 1)],
        ))
        .unwrap();
        assert_eq!(s1, sp(&[(1, 1)]));

        // {(k=2, lambda=1, u=+1)} -> {1, 2}
        let s2 = spectrum_from_blocks(&BlockSpec::circle_only(
            Sign::Minus,
            vec![block(2, 1, 1, Sign::Plus, 1)],
        ))
        .unwrap();
        assert_eq!(s2, sp(&[(1, 1), (2, 1)]));

        // {(1,1,+1), (1,1,-1)} -> {1, 2}
        let s3 = spectrum_from_blocks(&BlockSpec::circle_only(
            Sign::Minus,
            vec![block(1, 1, 1, Sign::Plus, 1), block(1, 1, 1, Sign::Minus, 1)],
        ))
        .unwrap();
        assert_eq!(s3, sp(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn half_turn_blocks() {
        // W^1_{-1}(+1) -> {3/2}, W^1_{-1}(-1) -> {1/2}
        let plus = spectrum_from_blocks(&BlockSpec::circle_only(
            Sign::Minus,
            vec![block(1, 1, 2, Sign::Plus, 1)],
        ))
        .unwrap();
        assert_eq!(plus, sp(&[(3, 2)]));
        let minus = spectrum_from_blocks(&BlockSpec::circle_only(
            Sign::Minus,
            vec![block(1, 1, 2, Sign::Minus, 1)],
        ))
        .unwrap();
        assert_eq!(minus, sp(&[(1, 2)]));
    }

    #[test]
    fn size_matches_dimension() {
        let spec = BlockSpec::circle_only(
            Sign::Minus,
            vec![
                block(3, 1, 1, Sign::Plus, 2),
                block(2, 1, 4, Sign::Minus, 1),
                block(1, 5, 6, Sign::Plus, 3),
            ],
        );
        let total: usize = spec.circle_dim();
        assert_eq!(spectrum_from_blocks(&spec).unwrap().total(), total);
    }

    #[test]
    fn rejects_offcircle() {
        let spec = BlockSpec {
            epsilon: Sign::Minus,
            circle: vec![],
            offcircle: vec![OffCircleBlock {
                k: 1,
                lam: GaussianRational::new(rat(1, 2), rat(0, 1)),
                mult: 1,
            }],
        };
        assert!(matches!(spectrum_from_blocks(&spec), Err(HvsError::OffCircleBlocksPresent)));
    }

    #[test]
    fn window_counting() {
        let s = sp(&[(1, 2), (1, 1), (3, 2), (2, 1)]);
        let x = rat(1, 4);
        assert_eq!(s.count_in_open_window(&x), 2); // 1/2 and 1
        assert_eq!(s.count_outside_closed_window(&x), 2); // 3/2 and 2
        assert!(s.non_integral_symmetric_about_one());
        assert_eq!(s.integral_multiplicities(), (1, 1));
    }
}
