use proptest::prelude::*;

use reducibility_core::bass::{bass0, MonomialPrime};
use reducibility_core::duality::{
    check_dual_sum_intersection, check_finite_length, min_cover_oracle, quotient_check,
    sum_irreducible_iff_dual_irreducible, Staircase,
};
use reducibility_core::monomial::{minimalize, Monomial, MonomialIdeal};

fn finite_length_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(1u32..=4, n),
            prop::collection::vec(prop::collection::vec(0u32..=4, n), 0..5),
        )
            .prop_map(move |(powers, extra)| {
                let mut gens: Vec<Monomial> = powers
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| Monomial::pure_power(n, i, a))
                    .collect();
                gens.extend(extra.into_iter().map(|e| Monomial::new(e).unwrap()));
                minimalize(n, gens).unwrap()
            })
            .prop_filter("proper", |i| !i.is_unit())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn finite_length_indices_agree(i in finite_length_ideal()) {
        let r = check_finite_length(&i).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn corners_are_the_socle(i in finite_length_ideal()) {
        let g = Staircase::from_ideal(&i).unwrap();
        let (mu0, _) = bass0(&i, &MonomialPrime::new(0..i.var_count()));
        prop_assert_eq!(mu0, g.maximal_elements().len());
        prop_assert_eq!(min_cover_oracle(&g).map(|o| o.minimum).unwrap_or(mu0), mu0);
    }

    #[test]
    fn irreducible_iff_dual_sum_irreducible(i in finite_length_ideal()) {
        let (left, right) = sum_irreducible_iff_dual_irreducible(&i).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn downset_pairs(i in finite_length_ideal(), picks in prop::collection::vec(any::<prop::sample::Index>(), 4)) {
        let g = Staircase::from_ideal(&i).unwrap();
        let elems = g.monomials().to_vec();
        let generated = |ps: &[prop::sample::Index]| {
            ps.iter().fold(g.empty_downset(), |acc, p| acc.union(&g.principal_downset(p.get(&elems)).unwrap()))
        };
        let (b, c) = (generated(&picks[..2]), generated(&picks[2..]));
        let (left, right) = check_dual_sum_intersection(&g, &b, &c);
        prop_assert_eq!(left, right);
        let q = quotient_check(&g, &b);
        prop_assert!(q.monotone && q.irreducibility_inherited);
    }
}
