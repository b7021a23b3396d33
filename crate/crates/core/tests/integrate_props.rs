use filterint::exactnum::{frac, rat, Rational};
use filterint::integrate::{
    closed_form, closed_form_via_recurrence, filter_integral, filter_integrals, laguerre_identities,
    recurrence_values, verify_cross_terms,
};
use filterint::orthopoly::value_at_zero;
use filterint::{Execution, Family};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn cross_terms_vanish_up_to_50() {
    let mut fams: Vec<Family> = Family::FIXED.to_vec();
    fams.push(Family::gegenbauer(frac(7, 3)).unwrap());
    for fam in fams {
        let r = verify_cross_terms(&fam, 50, Execution::default());
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn laguerre_routes_to_200() {
    let direct = filter_integrals(&Family::Laguerre, 200, Execution::default());
    let rec = recurrence_values(&Family::Laguerre, 200);
    for n in 1..=200u64 {
        assert_eq!(direct[n as usize - 1], closed_form(&Family::Laguerre, n));
        assert_eq!(rec[n as usize], closed_form(&Family::Laguerre, n), "n={n}");
    }
}

#[test]
fn legendre_beta_consistency() {
    for n in (2..=200u64).step_by(2) {
        let b = value_at_zero(&Family::Legendre, n);
        assert_eq!(closed_form(&Family::Legendre, n).coeff, rat(2) * (rat(1) - &b * &b));
    }
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Legendre),
        Just(Family::Hermite),
        Just(Family::ChebyshevT),
        Just(Family::ChebyshevU),
        Just(Family::Laguerre),
        (-49i64..300, 1i64..50)
            .prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
            .prop_filter("admissible", |a| !a.is_zero() && *a > frac(-1, 2))
            .prop_map(|a| Family::gegenbauer(a).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn three_routes_agree(fam in family(), n in 1u64..40) {
        let closed = closed_form(&fam, n);
        prop_assert_eq!(&filter_integral(&fam, n), &closed);
        prop_assert_eq!(&closed_form_via_recurrence(&fam, n), &closed);
    }

    #[test]
    fn laguerre_identities_hold(n in 1u64..=100) {
        let r = laguerre_identities(n);
        prop_assert!(r.passed(), "{}", r);
    }
}
