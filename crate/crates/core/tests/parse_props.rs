use proptest::prelude::*;

use reducibility_core::monomial::{minimalize, Monomial, RingContext};
use reducibility_core::parse::{
    canonical_group, parse_group, parse_ideal, parse_polynomial, IdealInput, PolynomialInput,
};
use reducibility_core::{FiniteAbelianGroup, FiniteField, UniPoly};

fn ideal_input() -> impl Strategy<Value = IdealInput> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=6, n), 0..6).prop_map(move |gens| {
            let ring = RingContext::new(["x", "y", "z", "w"].into_iter().take(n)).unwrap();
            let ideal = minimalize(n, gens.into_iter().map(|e| Monomial::new(e).unwrap())).unwrap();
            IdealInput { ring, ideal }
        })
    })
}

proptest! {
    #[test]
    fn ideal_echo_round_trips(input in ideal_input()) {
        prop_assert_eq!(parse_ideal(&input.canonical()).unwrap(), input);
    }

    #[test]
    fn polynomial_echo_round_trips(q in prop::sample::select(vec![2u32, 3, 4, 9, 27]), coeffs in prop::collection::vec(0u32..27, 1..7)) {
        let field = FiniteField::of_size(q).unwrap();
        let poly = UniPoly::new(coeffs.into_iter().map(|c| c % q).collect());
        prop_assume!(!poly.is_zero());
        let extension = (!field.is_prime_field()).then(|| field.clone());
        let input = PolynomialInput { field, poly, extension };
        prop_assert_eq!(parse_polynomial(&input.canonical()).unwrap(), input);
    }

    #[test]
    fn group_echo_round_trips(orders in prop::collection::vec(2u64..=30, 1..4)) {
        let g = FiniteAbelianGroup::from_cyclic_orders(orders).unwrap();
        prop_assert_eq!(parse_group(&canonical_group(&g)).unwrap(), g);
    }
}
