use proptest::prelude::*;

use reducibility_core::univariate::factor::TrialDivision;
use reducibility_core::univariate::{base_change_field, factor, ir_hypersurface};
use reducibility_core::{FiniteField, PolyRing, UniPoly};

fn field() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 13, 25, 27])
        .prop_map(|q| FiniteField::of_size(q).unwrap())
}

fn poly_over(q: u32, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(0..q, 1..=max_degree), 1..q).prop_map(|(mut c, lead)| {
        c.push(lead);
        UniPoly::new(c)
    })
}

fn field_and_poly(max_degree: usize) -> impl Strategy<Value = (FiniteField, UniPoly)> {
    field().prop_flat_map(move |f| {
        let q = f.size();
        (Just(f), poly_over(q, max_degree))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_reconstructs((f, p) in field_and_poly(8)) {
        let ring = PolyRing::new(&f);
        let fac = factor(&f, &p).unwrap();
        prop_assert_eq!(fac.reconstruct(&ring), p);
        for (g, m) in &fac.factors {
            prop_assert!(g.is_monic() && *m >= 1);
            let single = factor(&f, g).unwrap();
            prop_assert_eq!(single.factors.len(), 1);
            prop_assert_eq!(single.factors[0].1, 1);
        }
    }

    #[test]
    fn factorization_matches_trial_division(p in poly_over(3, 5)) {
        let f3 = FiniteField::prime(3).unwrap();
        let oracle = TrialDivision::new(&f3, 5);
        prop_assert_eq!(factor(&f3, &p).unwrap(), oracle.factor(&p).unwrap());
    }

    #[test]
    fn field_extension_law(p in poly_over(2, 6), k in 2u32..=4) {
        let f2 = FiniteField::prime(2).unwrap();
        let ext = FiniteField::canonical_extension(2, k).unwrap();
        let r = base_change_field(&f2, &ext, &p).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
        prop_assert_eq!(r.ir_before, ir_hypersurface(&f2, &p).unwrap());
    }

    #[test]
    fn hypersurface_index_is_subadditive(f in poly_over(5, 3), g in poly_over(5, 3)) {
        let f5 = FiniteField::prime(5).unwrap();
        let ring = PolyRing::new(&f5);
        let fg = ir_hypersurface(&f5, &ring.mul(&f, &g)).unwrap();
        let sum = ir_hypersurface(&f5, &f).unwrap() + ir_hypersurface(&f5, &g).unwrap();
        prop_assert!(fg <= sum);
        prop_assert_eq!(fg == sum, ring.gcd(&f, &g).degree() == Some(0));
    }
}
