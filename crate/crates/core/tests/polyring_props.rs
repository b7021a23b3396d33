use filterint::exactnum::{rat, Rational};
use filterint::polyring::{isolate_roots, sturm_count, Poly};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..30).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    vec(coeff(), 0..=max_len).prop_map(Poly::new)
}

fn distinct_roots() -> impl Strategy<Value = Vec<Rational>> {
    btree_set((-400i64..400, 1i64..8), 1..=12).prop_map(|s| {
        let mut roots: Vec<Rational> = s
            .into_iter()
            .map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        roots.sort();
        roots.dedup();
        roots
    })
}

fn from_roots(roots: &[Rational]) -> Poly {
    roots
        .iter()
        .fold(Poly::one(), |acc, r| &acc * &Poly::linear(-r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn deflation_reassembles(p in poly(51)) {
        let back = &(&p.deflate_at_zero() * &Poly::x()) + &Poly::constant(p.constant_term());
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exact_division_inverts_product(p in poly(20), d in poly(10)) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).exact_divide(&d).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_counts_distinct_linear_factors(roots in distinct_roots(), scale in 1i64..50) {
        let p = from_roots(&roots).scale(&rat(scale));
        let bound = rat(1000);
        prop_assert_eq!(sturm_count(&p, &-&bound, &bound).unwrap(), roots.len());
        // a repeated factor changes nothing
        let doubled = &p * &Poly::linear(-&roots[0]);
        prop_assert_eq!(sturm_count(&doubled, &-&bound, &bound).unwrap(), roots.len());
    }

    #[test]
    fn isolating_boxes_are_disjoint_and_simple(roots in distinct_roots()) {
        let boxes = isolate_roots(&from_roots(&roots));
        prop_assert_eq!(boxes.len(), roots.len());
        for (b, r) in boxes.iter().zip(&roots) {
            prop_assert_eq!(b.count, 1);
            prop_assert!(&b.lo < r && r <= &b.hi);
            prop_assert!(b.width() <= Rational::new(BigInt::from(1), BigInt::from(1024)));
        }
        for w in boxes.windows(2) {
            prop_assert!(w[0].disjoint_from(&w[1]));
            prop_assert!(!(w[1].lo.clone() - &w[0].hi).is_negative());
        }
    }
}
