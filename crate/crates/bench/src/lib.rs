//! Fixed inputs shared by the benchmarks.

use reducibility_core::parse::parse_ideal;
use reducibility_core::{FiniteAbelianGroup, FiniteField, MonomialIdeal, UniPoly};

/// Ideals of growing difficulty for the decomposition and Bass benchmarks.
pub fn ideals() -> Vec<(&'static str, MonomialIdeal)> {
    [
        ("two-var", "x^2, x*y, y^3"),
        ("three-var", "x^3, x^2*y, y^2*z, z^3, x*y*z"),
        ("four-var", "x^4, x^2*y^3, y^4, z^3*w, x*z^2, w^4, y*z*w^2"),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_ideal(text).expect("fixture parses").ideal))
    .collect()
}

/// Degree-8 polynomials over fields of increasing size.
pub fn polynomials() -> Vec<(String, FiniteField, UniPoly)> {
    [2u32, 9, 49, 2197]
        .into_iter()
        .map(|q| {
            let field = FiniteField::of_size(q).expect("small field");
            let mut coeffs: Vec<u32> = (0..8u32).map(|i| (i * 7 + 3) % q).collect();
            coeffs.push(1);
            (format!("GF({q})"), field, UniPoly::new(coeffs))
        })
        .collect()
}

pub fn groups() -> Vec<FiniteAbelianGroup> {
    [
        &[2u64, 2, 2, 2][..],
        &[4, 4, 2],
        &[2, 2, 2, 2, 2, 2],
        &[8, 9],
    ]
    .into_iter()
    .map(|orders| FiniteAbelianGroup::from_cyclic_orders(orders.iter().copied()).expect("valid"))
    .collect()
}
