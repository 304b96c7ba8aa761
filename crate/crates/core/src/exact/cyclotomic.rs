//! Cyclotomic polynomials, trial-division factorisation and an exact count
//! of unit-circle roots for the non-cyclotomic remainder.

use num_traits::Zero;
use std::collections::BTreeMap;

use super::poly::RatPoly;
use super::rational::{rat_int, sign_of, Rational};
use super::Result;

/// Euler totient by trial division.
pub fn euler_phi(d: u64) -> u64 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The d-th cyclotomic polynomial, by the recursion
/// `Phi_d = (z^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic(d: u64) -> RatPoly {
    let mut cache = BTreeMap::new();
    cyclotomic_cached(d, &mut cache)
}

fn cyclotomic_cached(d: u64, cache: &mut BTreeMap<u64, RatPoly>) -> RatPoly {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    // z^d - 1
    let mut coeffs = vec![Rational::zero(); d as usize + 1];
    coeffs[0] = rat_int(-1);
    coeffs[d as usize] = rat_int(1);
    let mut num = RatPoly::new(coeffs);
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclotomic_cached(e, cache);
            num = num.divmod(&phi_e).expect("nonzero divisor").0;
        }
    }
    cache.insert(d, num.clone());
    num
}

/// Splits off every cyclotomic factor of `p` by trial division.
///
/// Returns the list of `(d, multiplicity)` with `p = prod Phi_d^mult *
/// remainder` and the remainder coprime to every cyclotomic polynomial of
/// degree at most `deg p`. A nontrivial remainder is not an error; callers
/// decide what a non-root-of-unity eigenvalue means for them.
pub fn cyclotomic_split(p: &RatPoly) -> (Vec<(u64, usize)>, RatPoly) {
    assert!(!p.is_zero(), "cyclotomic_split of the zero polynomial");
    let n = match p.degree() {
        None | Some(0) => return (vec![], p.clone()),
        Some(n) => n as u64,
    };
    // phi(d) >= sqrt(d/2) for every d, so phi(d) <= n forces d <= 2 n^2.
    let bound = (2 * n * n).max(6);
    let mut factors = Vec::new();
    let mut rem = p.clone();
    let mut cache = BTreeMap::new();
    for d in 1..=bound {
        if euler_phi(d) > n {
            continue;
        }
        if rem.degree() == Some(0) {
            break;
        }
        let phi = cyclotomic_cached(d, &mut cache);
        let mut mult = 0;
        while let Some(q) = rem.divides_exactly(&phi).expect("nonzero divisor") {
            rem = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
        }
    }
    (factors, rem)
}

/// Least common multiple of the orders appearing in a cyclotomic split.
pub fn order_lcm(factors: &[(u64, usize)]) -> u64 {
    factors.iter().fold(1u64, |acc, &(d, _)| num_integer::lcm(acc, d))
}

/// Exact number of roots of `p` on the unit circle (with the convention that
/// a nonzero count only reports presence per distinct root; multiplicities
/// are not resolved). Used to certify that a non-cyclotomic remainder has no
/// unit-circle roots at all.
///
/// Assumes `p(1) != 0` and `p(-1) != 0`, which holds for any remainder of
/// [`cyclotomic_split`] of positive degree.
pub fn unit_circle_root_count(p: &RatPoly) -> Result<usize> {
    let one = rat_int(1);
    let minus_one = rat_int(-1);
    assert!(!p.eval(&one).is_zero() && !p.eval(&minus_one).is_zero(), "roots at +-1 must be split off first");
    // unit-circle roots are shared with the reversed polynomial
    let g = p.gcd(&p.reverse());
    let Some(deg) = g.degree() else { return Ok(0) };
    if deg == 0 {
        return Ok(0);
    }
    // g is palindromic of even degree 2m with g(+-1) != 0; substitute
    // w = z + 1/z, i.e. write g(z) = z^m G(w), and count real roots of G
    // in (-2, 2). Each such w is a conjugate pair of circle roots.
    let big_g = chebyshev_reduce(&g)?;
    Ok(2 * sturm_count_open(&big_g, &rat_int(-2), &rat_int(2)))
}

/// Writes a palindromic even-degree polynomial `g(z) = z^m G(z + 1/z)` and
/// returns `G`.
fn chebyshev_reduce(g: &RatPoly) -> Result<RatPoly> {
    let deg = g.degree().unwrap_or(0);
    assert!(deg % 2 == 0, "palindromic polynomial of odd degree");
    let m = deg / 2;
    // basis polys: z^m * w^j = z^(m-j) (z^2+1)^j, highest z-degree m+j
    let z2p1 = RatPoly::from_ints(&[1, 0, 1]);
    let mut work = g.clone();
    let mut coeffs = vec![Rational::zero(); m + 1];
    for j in (0..=m).rev() {
        let c = work.coeff(m + j);
        coeffs[j] = c.clone();
        if !c.is_zero() {
            // subtract c * z^(m-j) (z^2+1)^j
            let mut basis = z2p1.pow(j);
            let mut shifted = vec![Rational::zero(); m - j];
            shifted.extend_from_slice(basis.coeffs());
            basis = RatPoly::new(shifted);
            work = work.sub(&basis.scale(&c));
        }
    }
    assert!(work.is_zero(), "polynomial was not palindromic");
    Ok(RatPoly::new(coeffs))
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`,
/// assuming `p(a) != 0 != p(b)`, by Sturm's theorem.
fn sturm_count_open(p: &RatPoly, a: &Rational, b: &Rational) -> usize {
    if p.degree().is_none() || p.degree() == Some(0) {
        return 0;
    }
    let square_free = p.divmod(&p.gcd(&p.derivative())).expect("nonzero gcd").0;
    let mut chain = vec![square_free.clone(), square_free.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].divmod(&chain[n - 1]).expect("nonzero").1;
        chain.push(r.neg());
    }
    let variations = |x: &Rational| {
        let signs: Vec<i32> = chain.iter().map(|q| sign_of(&q.eval(x))).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(a) - variations(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn phi_values() {
        let expect = [(1u64, 1u64), (2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (8, 4), (12, 4)];
        for (d, phi) in expect {
            assert_eq!(euler_phi(d), phi, "phi({d})");
        }
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), RatPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(4), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), RatPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn split_examples() {
        // z^4 - 1 = Phi_1 Phi_2 Phi_4
        let p = RatPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let (f, rem) = cyclotomic_split(&p);
        assert_eq!(f, vec![(1, 1), (2, 1), (4, 1)]);
        assert!(rem.is_one());

        // (z-1)^2
        let p = RatPoly::from_ints(&[1, -2, 1]);
        let (f, rem) = cyclotomic_split(&p);
        assert_eq!(f, vec![(1, 2)]);
        assert!(rem.is_one());

        // z^2 - 2 has no cyclotomic divisors
        let p = RatPoly::from_ints(&[-2, 0, 1]);
        let (f, rem) = cyclotomic_split(&p);
        assert!(f.is_empty());
        assert_eq!(rem, p);

        // Phi_6 alone must be found (degree 2, d = 6)
        let (f, rem) = cyclotomic_split(&cyclotomic(6));
        assert_eq!(f, vec![(6, 1)]);
        assert!(rem.is_one());
    }

    #[test]
    fn split_reassembles() {
        let p = cyclotomic(3).mul(&cyclotomic(8)).mul(&cyclotomic(1).pow(2)).mul(&RatPoly::from_ints(&[-2, 0, 1]));
        let (f, rem) = cyclotomic_split(&p);
        let mut prod = rem.clone();
        for (d, m) in &f {
            prod = prod.mul(&cyclotomic(*d).pow(*m));
        }
        assert_eq!(prod, p);
    }

    #[test]
    fn circle_root_counting() {
        // z^2 - 2: roots +-sqrt2, none on the circle
        assert_eq!(unit_circle_root_count(&RatPoly::from_ints(&[-2, 0, 1])).unwrap(), 0);
        // (z^2-2)(z^2-1/2): reciprocal real pairs, still none on the circle
        let p = RatPoly::from_ints(&[-2, 0, 1]).mul(&RatPoly::new(vec![
            crate::exact::rational::rat(-1, 2),
            Rational::zero(),
            Rational::one(),
        ]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 0);
        // z^2 - (1/2) z + 1 hmm: use a known circle pair: z^2 - (6/5) z + 1 has
        // roots (3 +- 4i)/5 on the unit circle
        let q = RatPoly::new(vec![
            Rational::one(),
            crate::exact::rational::rat(-6, 5),
            Rational::one(),
        ]);
        assert_eq!(unit_circle_root_count(&q).unwrap(), 2);
    }
}
