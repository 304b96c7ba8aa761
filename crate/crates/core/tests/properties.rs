//! Property tests for the exact layer and the structure algebra.

use num_traits::One;
use proptest::prelude::*;

use hvs_core::exact::circle::{circle_point, gap_sample_raw};
use hvs_core::exact::cyclotomic::{cyclotomic, cyclotomic_split};
use hvs_core::exact::gaussian::{parse_gaussian, GaussianRational};
use hvs_core::exact::inertia::hermitian_inertia;
use hvs_core::exact::matrix::Matrix;
use hvs_core::exact::poly::RatPoly;
use hvs_core::exact::rational::{rat, Rational};
use hvs_core::hvs::signature::{hvs_nullity, hvs_signature};
use hvs_core::hvs::structure::{direct_sum, Sign};

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
}

fn gaussian_strategy() -> impl Strategy<Value = GaussianRational> {
    (rational_strategy(), rational_strategy()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circle_point_is_on_the_circle(t in rational_strategy()) {
        let p = circle_point(&t);
        prop_assert_eq!(&p.re * &p.re + &p.im * &p.im, Rational::one());
    }

    #[test]
    fn gaussian_wire_round_trips(z in gaussian_strategy()) {
        let s = z.to_wire();
        prop_assert_eq!(parse_gaussian(&s).unwrap(), z);
    }

    #[test]
    fn matrix_serde_round_trips(entries in proptest::collection::vec(gaussian_strategy(), 6)) {
        let m = Matrix::new(2, 3, entries);
        let json = serde_json::to_string(&m).unwrap();
        let back: Matrix = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn cyclotomic_split_reassembles(
        d1 in 1u64..=12,
        d2 in 1u64..=12,
        m1 in 1usize..=2,
        extra in -4i64..=4,
    ) {
        // a cyclotomic product times an irrelevant quadratic
        let mut p = cyclotomic(d1).pow(m1).mul(&cyclotomic(d2));
        if extra != 0 {
            p = p.mul(&RatPoly::from_ints(&[extra, 0, 1]));
        }
        let (factors, rem) = cyclotomic_split(&p);
        let mut prod = rem;
        for (d, m) in factors {
            prod = prod.mul(&cyclotomic(d).pow(m));
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn inertia_is_additive_on_block_sums(
        a in -20i64..=20,
        b in -20i64..=20,
        c in -20i64..=20,
    ) {
        let h1 = Matrix::from_int_rows(&[&[a, b], &[b, c]]);
        let h2 = Matrix::from_int_rows(&[&[c, -a], &[-a, b]]);
        let i1 = hermitian_inertia(&h1).unwrap();
        let i2 = hermitian_inertia(&h2).unwrap();
        let both = hermitian_inertia(&Matrix::block_diag(&[&h1, &h2])).unwrap();
        prop_assert_eq!(both.n_plus, i1.n_plus + i2.n_plus);
        prop_assert_eq!(both.n_minus, i1.n_minus + i2.n_minus);
        prop_assert_eq!(both.n_zero, i1.n_zero + i2.n_zero);
    }

    #[test]
    fn signature_additive_under_direct_sum(num in 1i64..=7, den in 8i64..=9, pick in 0usize..4) {
        use hvs_core::exact::circle::AngleFraction;
        use hvs_core::hvs::blocks::{block_v_circle, block_w, fix_quantum, realify_hvs};

        let quarter = AngleFraction::from_ints(1, 4);
        let one = AngleFraction::from_ints(1, 1);
        let parts = [
            block_w(1, &one, Sign::Plus, Sign::Minus).unwrap(),
            realify_hvs(&block_w(1, &quarter, Sign::Plus, Sign::Minus).unwrap()),
            block_v_circle(2, &one, Sign::Plus, Sign::Minus).unwrap(),
            fix_quantum(Sign::Minus).unwrap(),
        ];
        let x = &parts[pick];
        let y = &parts[(pick + 1) % parts.len()];
        let sum = direct_sum(x, y).unwrap();
        // a certified sample away from the base point
        let z = gap_sample_raw(&rat(num, den * den), &rat(num + 1, den * den)).unwrap();
        prop_assert_eq!(
            hvs_signature(&sum, &z).unwrap(),
            hvs_signature(x, &z).unwrap() + hvs_signature(y, &z).unwrap()
        );
        prop_assert_eq!(
            hvs_nullity(&sum, &z).unwrap(),
            hvs_nullity(x, &z).unwrap() + hvs_nullity(y, &z).unwrap()
        );
    }
}
