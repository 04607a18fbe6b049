use proptest::prelude::*;

use reducibility_core::abelian::{
    attached_primes, is_cyclic_prime_power, isomorphism_classes, quotient,
    secondary_representation, sum_reducibility_index_bruteforce, sum_reducibility_index_formula,
    FiniteAbelianGroup, SubgroupLattice,
};

fn small_group() -> impl Strategy<Value = FiniteAbelianGroup> {
    let classes = isomorphism_classes(48);
    prop::sample::select(classes)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bruteforce_matches_formula(g in small_group()) {
        let b = sum_reducibility_index_bruteforce(&g).unwrap();
        prop_assert!(b.equicardinal());
        prop_assert_eq!(b.index, sum_reducibility_index_formula(&g));
        prop_assert!(b.index >= attached_primes(&g).unwrap().len());
    }

    #[test]
    fn secondary_parts_are_secondary(g in small_group()) {
        let rep = secondary_representation(&g).unwrap();
        prop_assert!(rep.is_valid());
        prop_assert_eq!(rep.primes(), g.primes());
    }

    #[test]
    fn quotients_have_the_right_order(g in small_group(), pick in any::<prop::sample::Index>()) {
        let lattice = SubgroupLattice::new(&g).unwrap();
        let b = lattice.subgroup(pick.index(lattice.len()));
        let q = quotient(&g, &b).unwrap();
        prop_assert_eq!(q.order() * b.order() as u64, g.order());
        prop_assert!(sum_reducibility_index_formula(&q) <= sum_reducibility_index_formula(&g));
    }

    #[test]
    fn sum_irreducible_means_cyclic_prime_power(g in small_group()) {
        let lattice = SubgroupLattice::new(&g).unwrap();
        for i in 1..lattice.len() {
            let h = lattice.subgroup(i);
            prop_assert_eq!(lattice.is_sum_irreducible(&h).unwrap(), is_cyclic_prime_power(&g, &h));
        }
    }
}
