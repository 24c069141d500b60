use apery_core::exact::{rat, ratfun_equal, series_expand, ExactRational, FactoredRational, Polynomial, RationalFunction};
use apery_core::sequences::{check_inclusions, pair, recurrence_residual, Family, InclusionMode};
use apery_core::{lcm_upto, BigFloat};
use proptest::prelude::*;
use rug::ops::Pow;

fn rational() -> impl Strategy<Value = ExactRational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Polynomial::from_coeffs)
}

fn nonzero_polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (polynomial(4), nonzero_polynomial(4)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn nonzero_ratfun() -> impl Strategy<Value = RationalFunction> {
    ratfun().prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(a in polynomial(5), b in polynomial(5), c in polynomial(5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn division_with_remainder(a in polynomial(7), b in nonzero_polynomial(4)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_polynomial(5), b in nonzero_polynomial(5), c in nonzero_polynomial(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = Polynomial::gcd(&ac, &bc);
        prop_assert!(ac.div_rem(&g).1.is_zero());
        prop_assert!(bc.div_rem(&g).1.is_zero());
        prop_assert!(g.degree() >= c.degree());
    }

    #[test]
    fn ratfun_field_laws(f in ratfun(), g in nonzero_ratfun(), h in ratfun()) {
        prop_assert!(ratfun_equal(&(&(&f * &g) / &g).unwrap(), &f));
        prop_assert!(ratfun_equal(&(&(&f + &g) - &g), &f));
        prop_assert!(ratfun_equal(&(&f * &(&g + &h)), &(&(&f * &g) + &(&f * &h))));
        prop_assert!(ratfun_equal(&(&g * &g.recip().unwrap()), &RationalFunction::one()));
    }

    #[test]
    fn canonical_form_is_unique(f in ratfun(), k in nonzero_polynomial(3)) {
        let scaled = RationalFunction::new(f.numer() * &k, f.denom() * &k).unwrap();
        prop_assert_eq!(&scaled, &f);
    }

    #[test]
    fn shift_commutes_with_evaluation(f in ratfun(), a in rational(), t in rational()) {
        let shifted = f.shift(&a);
        let at = ExactRational::from(&t + &a);
        match (shifted.eval(&t), f.eval(&at)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "pole mismatch"),
        }
    }

    #[test]
    fn series_truncation_is_consistent(f in ratfun(), c in rational(), k in 1usize..6) {
        if f.denom().eval(&c) != 0 {
            let long = series_expand(&f, &c, k + 3).unwrap();
            let short = series_expand(&f, &c, k).unwrap();
            prop_assert_eq!(long.truncate(k), short);
            prop_assert_eq!(long.coeff(0), &f.eval(&c).unwrap());
        }
    }

    #[test]
    fn series_of_product(f in ratfun(), g in ratfun(), c in rational()) {
        let prod = &f * &g;
        if f.denom().eval(&c) != 0 && g.denom().eval(&c) != 0 {
            let lhs = series_expand(&prod, &c, 4).unwrap();
            let rhs = &series_expand(&f, &c, 4).unwrap() * &series_expand(&g, &c, 4).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn factored_matches_expanded(
        roots in prop::collection::vec((rational(), -3i64..=3), 0..5),
        scalar in rational(),
        t in rational(),
    ) {
        let f = roots.iter().fold(FactoredRational::constant(scalar), |acc, (r, m)| {
            &acc * &FactoredRational::linear(rat(1, 1), r.clone(), *m)
        });
        let expanded = f.to_rational_function();
        match (f.eval(&t), expanded.eval(&t)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "pole mismatch"),
        }
        if f.multiplicity(&t) >= 0 {
            let s = f.series_at(&t, 3).unwrap();
            prop_assert_eq!(s, series_expand(&expanded, &t, 3).unwrap());
        }
    }

    #[test]
    fn bigfloat_rational_roundtrip(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000, digits in 5u32..60) {
        let r = rat(p, q);
        let x = BigFloat::from_rational(&r, digits);
        let err = ExactRational::from(x.to_rational() - &r).abs();
        let bound = ExactRational::from(r.abs_ref()) / apery_core::ExactInteger::from(10).pow(digits);
        prop_assert!(err <= bound);
    }

    #[test]
    fn recurrence_holds_at_random_indices(n in 1u64..400) {
        for family in Family::ALL {
            let (a, b, c) = (pair(family, n - 1), pair(family, n), pair(family, n + 1));
            prop_assert_eq!(recurrence_residual(family, n, &a.u, &b.u, &c.u), 0);
            prop_assert_eq!(recurrence_residual(family, n, &a.v, &b.v, &c.v), 0);
        }
    }

    #[test]
    fn strong_inclusion_implies_proved(n in 0u64..300) {
        for family in Family::ALL {
            let strong = check_inclusions(family, n, InclusionMode::Strong);
            let proved = check_inclusions(family, n, InclusionMode::Proved);
            prop_assert!(!strong.passed() || proved.passed());
        }
    }
}

#[test]
fn lcm_prime_power_structure() {
    for n in 2..=300u64 {
        let ratio = apery_core::ExactInteger::from(lcm_upto(n) / lcm_upto(n - 1));
        if ratio != 1 {
            // D_n/D_{n−1} = p exactly when n is a power of the prime p.
            let p = ratio.to_u64().unwrap();
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            assert_eq!(m, 1, "n = {n}");
        }
    }
}
