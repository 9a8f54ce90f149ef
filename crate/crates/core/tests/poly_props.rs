//! Property tests for the exact polynomial layer.

use proptest::prelude::*;
use tomescu_core::poly::roots::{
    count_distinct_real_roots, largest_real_root, positive_beyond, Positivity, RootSearch,
};
use tomescu_core::poly::{rat, rint, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(6), q in poly(6), r in poly(6)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, Poly::zero());
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn degrees_behave(p in poly(6), q in poly(6)) {
        if !p.is_zero() && !q.is_zero() {
            prop_assert_eq!(
                (&p * &q).degree().unwrap(),
                p.degree().unwrap() + q.degree().unwrap()
            );
            let sum_deg = (&p + &q).degree();
            if let Some(d) = sum_deg {
                prop_assert!(d <= p.degree().unwrap().max(q.degree().unwrap()));
            }
        }
    }

    #[test]
    fn eval_shift_composition(p in poly(6), a in rational(), c in rational()) {
        prop_assert_eq!(p.shift(&c).eval(&a), p.eval(&(&a + &c)));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(5), q in poly(5)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(p in poly(5), q in poly(5), a in rational()) {
        prop_assert_eq!((&p + &q).eval(&a), p.eval(&a) + q.eval(&a));
        prop_assert_eq!((&p * &q).eval(&a), p.eval(&a) * q.eval(&a));
    }

    /// Root-count soundness on products of known linear factors: the Sturm
    /// count equals the number of distinct constructed roots, and the
    /// isolation brackets the largest one.
    #[test]
    fn constructed_roots_are_found(mut roots in prop::collection::vec(-12i64..=12, 1..5), complex in any::<bool>()) {
        let mut p = Poly::one();
        for &r in &roots {
            p = &p * &Poly::x_minus(r);
        }
        if complex {
            // a factor with no real root must not disturb the count
            p = &p * &Poly::from_ints(&[1, 0, 1]);
        }
        roots.sort_unstable();
        roots.dedup();
        prop_assert_eq!(count_distinct_real_roots(&p), roots.len());
        let max = *roots.last().unwrap();
        match largest_real_root(&p, &rat(1, 1000)).unwrap() {
            RootSearch::Interval(iv) => {
                prop_assert!(iv.lo_rational() <= rint(max));
                prop_assert!(rint(max) <= iv.hi_rational());
                prop_assert!(iv.width() <= rat(1, 1000));
                // isolation: the next-largest root stays outside
                if roots.len() > 1 {
                    prop_assert!(iv.lo_rational() > rint(roots[roots.len() - 2]));
                }
            }
            RootSearch::NoRealRoot => prop_assert!(false, "constructed roots exist"),
        }
    }

    /// A certified positive verdict implies positivity on a dense rational
    /// sample of `[x0, x0 + 100]`.
    #[test]
    fn positivity_verdict_is_sound(p in poly(5), x0 in -10i64..=10) {
        let x0 = rint(x0);
        if positive_beyond(&p, &x0) == Positivity::PositiveForAllXGeX0 {
            for step in 0..=200 {
                let x = &x0 + rat(step, 2);
                prop_assert!(p.eval(&x) > rint(0), "positivity broken at {x}");
            }
        }
    }

    #[test]
    fn coefficient_strings_round_trip(p in poly(8)) {
        let strings = p.to_coeff_strings();
        prop_assert_eq!(Poly::from_coeff_strings(&strings).unwrap(), p);
    }
}

#[test]
fn falling_factorial_counts_injections() {
    // (x)_k at integer x counts injections of k slots into x colors
    for k in 0..=5usize {
        for x in 0..=7i64 {
            let mut expected = 1i64;
            for j in 0..k as i64 {
                expected *= x - j;
            }
            assert_eq!(Poly::falling_factorial(k).eval(&rint(x)), rint(expected.max(0).min(expected)));
        }
    }
}
