use std::collections::BTreeSet;

use proptest::prelude::*;

use reducibility_core::base_change::{check_base_change, extend_polynomial, BaseChange};
use reducibility_core::bass::{ass_by_colon_scan, associated_primes, reducibility_index_by_bass};
use reducibility_core::decompose::{component_contains, decompose, decompose_with, SplitStrategy};
use reducibility_core::monomial::{minimalize, Monomial, MonomialIdeal};

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(e).unwrap())
}

fn ideal_in(n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, max_exp), 0..6)
        .prop_map(move |gens| minimalize(n, gens).unwrap())
}

/// Proper ideals (possibly zero) in 1 to 4 variables.
fn proper_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(|n| ideal_in(n, 5))
        .prop_filter("proper", |i| !i.is_unit())
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, Monomial)> {
    (1usize..=3).prop_flat_map(|n| (ideal_in(n, 4), ideal_in(n, 4), monomial(n, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn minimalize_is_idempotent(i in proper_ideal()) {
        let again = minimalize(i.var_count(), i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for (a, g) in i.generators().iter().enumerate() {
            for (b, h) in i.generators().iter().enumerate() {
                prop_assert!(a == b || !g.divides(h).unwrap());
            }
        }
    }

    #[test]
    fn colon_and_intersection_laws((i, j, u) in ideal_pair()) {
        let meet = i.intersect(&j);
        prop_assert!(meet.is_subset_of(&i) && meet.is_subset_of(&j));
        prop_assert_eq!(&meet, &j.intersect(&i));
        let sum = i.sum(&j);
        prop_assert!(i.is_subset_of(&sum) && j.is_subset_of(&sum));
        // v ∈ I : u  ⇔  u·v ∈ I
        let colon = i.colon(&u);
        for g in colon.generators() {
            prop_assert!(i.contains(&g.mul(&u)));
        }
        for g in i.generators() {
            prop_assert!(colon.contains(g));
        }
    }

    #[test]
    fn decomposition_is_sound_and_irredundant(i in proper_ideal()) {
        let d = decompose(&i).unwrap();
        let n = i.var_count();
        let meet = d.components().iter().fold(MonomialIdeal::unit(n), |acc, c| acc.intersect(&c.to_ideal()));
        prop_assert_eq!(&meet, &i);
        for skip in 0..d.ir() {
            let rest = d.components().iter().enumerate().filter(|&(k, _)| k != skip)
                .fold(MonomialIdeal::unit(n), |acc, (_, c)| acc.intersect(&c.to_ideal()));
            prop_assert!(rest != i);
            prop_assert!(component_contains(&d.components()[skip], &i));
        }
    }

    #[test]
    fn strategy_does_not_matter(i in proper_ideal(), seed in any::<u64>()) {
        let a = decompose_with(&i, SplitStrategy::FirstVariable).unwrap();
        let b = decompose_with(&i, SplitStrategy::LastVariable).unwrap();
        let c = decompose_with(&i, SplitStrategy::Seeded(seed)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn bass_formula_matches_decomposition(i in proper_ideal()) {
        let report = reducibility_index_by_bass(&i).unwrap();
        let d = decompose(&i).unwrap();
        prop_assert_eq!(report.ir_by_formula, d.ir());
        prop_assert!(d.ir() >= report.entries.len());
        for (p, e) in &report.entries {
            prop_assert_eq!(d.count_with_support(p.support()), e.mu0);
        }
    }

    #[test]
    fn associated_primes_match_colon_scan(i in proper_ideal()) {
        prop_assert_eq!(associated_primes(&i).unwrap(), ass_by_colon_scan(&i).unwrap());
    }

    #[test]
    fn adjoining_variables_preserves_ir(i in proper_ideal(), extra in 1usize..=2) {
        let before = decompose(&i).unwrap().ir();
        prop_assert_eq!(decompose(&extend_polynomial(&i, extra)).unwrap().ir(), before);
        prop_assert!(check_base_change(&i, &BaseChange::Extend(extra), None).unwrap().passed());
    }

    #[test]
    fn localization_formula_holds(i in (1usize..=3).prop_flat_map(|n| ideal_in(n, 5)).prop_filter("proper", |i| !i.is_unit()), mask in 0u32..8) {
        let n = i.var_count();
        let inverted: BTreeSet<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let r = check_base_change(&i, &BaseChange::Invert(inverted), None).unwrap();
        prop_assert!(r.passed());
        prop_assert!(r.ir_after <= r.ir_before);
    }
}
