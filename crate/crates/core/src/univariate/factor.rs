//! Complete factorization of univariate polynomials over small finite fields.
//!
//! Distinct-degree splitting isolates, for each `d`, the product of the distinct
//! irreducible factors of degree `d` as `gcd(f, x^{q^d} - x)`. Products of several
//! same-degree factors are separated deterministically with the absolute trace:
//! over `F_q[x]/(h) ≅ Π F_{q^d}` the map `a ↦ Σ_{m < kd} a^{p^m}` takes values in
//! `F_p` on every component, and some basis element `t^i x^j` takes different
//! values on any two components, so `gcd(h, T(a) - c)` splits `h`.

use std::cmp::Ordering;

use serde::Serialize;

use super::field::FiniteField;
use super::poly::{canonical_cmp, PolyRing, UniPoly};
use super::{MAX_FACTOR_DEGREE, MAX_FIELD_SIZE};
use crate::error::{Error, Result};

/// `unit · Π factor^multiplicity` with monic irreducible, pairwise distinct factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }

    pub fn reconstruct(&self, ring: &PolyRing<'_>) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit), |acc, (p, m)| {
                ring.mul(&acc, &ring.pow(p, *m))
            })
    }

    pub fn display(&self, ring: &PolyRing<'_>) -> String {
        let mut out = String::new();
        if self.unit != 1 || self.factors.is_empty() {
            out.push_str(&ring.field().fmt_element(self.unit));
        }
        for (p, m) in &self.factors {
            out.push('(');
            out.push_str(&ring.display(p));
            out.push(')');
            if *m > 1 {
                out.push_str(&format!("^{m}"));
            }
        }
        out
    }
}

fn check_bounds(field: &FiniteField, f: &UniPoly) -> Result<usize> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge(deg));
    }
    if field.size() > MAX_FIELD_SIZE {
        return Err(Error::FieldTooLarge(field.size() as u64));
    }
    Ok(deg)
}

pub fn factor(field: &FiniteField, f: &UniPoly) -> Result<Factorization> {
    check_bounds(field, f)?;
    let ring = PolyRing::new(field);
    let unit = f.leading();
    let mut rest = ring.monic(f);
    let mut factors = Vec::new();
    for p in distinct_irreducible_factors(&ring, &rest) {
        let mut mult = 0;
        loop {
            let (q, r) = ring.divmod(&rest, &p)?;
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        factors.push((p, mult));
    }
    debug_assert_eq!(rest, UniPoly::constant(1));
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(Factorization { unit, factors })
}

/// The distinct monic irreducible factors of a monic polynomial.
fn distinct_irreducible_factors(ring: &PolyRing<'_>, g: &UniPoly) -> Vec<UniPoly> {
    let deg = g.degree().unwrap_or(0);
    let q = ring.field().size() as u64;
    let x = UniPoly::x();
    let mut found: Vec<UniPoly> = Vec::new();
    let mut frobenius = match ring.rem(&x, g) {
        Ok(r) if deg > 0 => r,
        _ => return found,
    };
    for d in 1..=deg {
        frobenius = ring.pow_mod(&frobenius, q, g).expect("nonzero modulus");
        let mut part = ring.gcd(g, &ring.sub(&frobenius, &x));
        for p in found.iter().filter(|p| d % p.degree().unwrap_or(1) == 0) {
            let (quot, r) = ring.divmod(&part, p).expect("nonzero divisor");
            if r.is_zero() {
                part = quot;
            }
        }
        if part.degree().unwrap_or(0) > 0 {
            found.extend(split_equal_degree(ring, &part, d));
        }
    }
    found
}

fn split_equal_degree(ring: &PolyRing<'_>, h: &UniPoly, d: usize) -> Vec<UniPoly> {
    let deg = h.degree().unwrap_or(0);
    if deg == d {
        return vec![h.clone()];
    }
    let field = ring.field();
    let p = field.characteristic();
    let k = field.degree() as usize;
    for i in 0..k {
        let scalar = p.pow(i as u32);
        for j in 0..deg {
            let mut coeffs = vec![0; j + 1];
            coeffs[j] = scalar;
            let a = UniPoly::new(coeffs);
            let trace = absolute_trace(ring, &a, h, k * d);
            for c in 0..p {
                let g = ring.gcd(h, &ring.sub(&trace, &UniPoly::constant(c)));
                let gd = g.degree().unwrap_or(0);
                if gd > 0 && gd < deg {
                    let (other, _) = ring.divmod(h, &g).expect("nonzero divisor");
                    let mut out = split_equal_degree(ring, &g, d);
                    out.extend(split_equal_degree(ring, &other, d));
                    return out;
                }
            }
        }
    }
    unreachable!("trace of the basis separates distinct factors")
}

/// `Σ_{m < steps} a^{p^m} mod h`.
fn absolute_trace(ring: &PolyRing<'_>, a: &UniPoly, h: &UniPoly, steps: usize) -> UniPoly {
    let p = ring.field().characteristic() as u64;
    let mut term = ring.rem(a, h).expect("nonzero modulus");
    let mut sum = UniPoly::zero();
    for _ in 0..steps {
        sum = ring.add(&sum, &term);
        term = ring.pow_mod(&term, p, h).expect("nonzero modulus");
    }
    sum
}

/// Irreducibility test through the factorization.
pub fn is_irreducible(field: &FiniteField, f: &UniPoly) -> Result<bool> {
    let fac = factor(field, f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Factorization by trial division against every monic irreducible of small degree.
///
/// Slow but independent of [`factor`]; it is the reference the fast path is tested against.
pub struct TrialDivision<'a> {
    ring: PolyRing<'a>,
    irreducibles: Vec<UniPoly>,
}

impl<'a> TrialDivision<'a> {
    /// Precomputes the monic irreducibles of degree `1..=max_degree` by sieving.
    pub fn new(field: &'a FiniteField, max_degree: usize) -> Self {
        let ring = PolyRing::new(field);
        let mut irreducibles: Vec<UniPoly> = Vec::new();
        for d in 1..=max_degree {
            for candidate in ring.monic_of_degree(d) {
                let composite = irreducibles
                    .iter()
                    .take_while(|p| 2 * p.degree().unwrap_or(0) <= d)
                    .any(|p| ring.rem(&candidate, p).is_ok_and(|r| r.is_zero()));
                if !composite {
                    irreducibles.push(candidate);
                }
            }
        }
        TrialDivision { ring, irreducibles }
    }

    pub fn irreducibles(&self) -> &[UniPoly] {
        &self.irreducibles
    }

    /// Monic irreducible factors with multiplicities, in canonical order.
    pub fn factor(&self, f: &UniPoly) -> Result<Factorization> {
        let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
        let mut rest = self.ring.monic(f);
        let mut factors = Vec::new();
        for p in &self.irreducibles {
            if p.degree().unwrap_or(0) > deg {
                break;
            }
            let mut m = 0;
            loop {
                let (q, r) = self.ring.divmod(&rest, p)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            if m > 0 {
                factors.push((p.clone(), m));
            }
        }
        if rest.degree() != Some(0) {
            return Err(Error::DegreeTooLarge(deg));
        }
        sort_factors(&mut factors);
        Ok(Factorization {
            unit: f.leading(),
            factors,
        })
    }
}

/// Orders factor lists canonically (used when comparing against other routes).
pub fn sort_factors(factors: &mut [(UniPoly, u32)]) {
    factors.sort_by(|a, b| match canonical_cmp(&a.0, &b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> UniPoly {
        UniPoly::new(c.to_vec())
    }

    #[test]
    fn irreducible_quadratic_over_f2() {
        let f2 = FiniteField::prime(2).unwrap();
        let fac = factor(&f2, &p(&[1, 1, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn quadratic_splits_over_f4() {
        let f4 = FiniteField::extension(2, &[1, 1, 1]).unwrap();
        let t = f4.generator().unwrap();
        let fac = factor(&f4, &p(&[1, 1, 1])).unwrap();
        assert_eq!(
            fac.factors,
            vec![(p(&[t, 1]), 1), (p(&[f4.add(t, 1), 1]), 1)]
        );
        let ring = PolyRing::new(&f4);
        assert_eq!(fac.reconstruct(&ring), p(&[1, 1, 1]));
        assert_eq!(fac.display(&ring), "(x + t)(x + (t + 1))");
    }

    #[test]
    fn pure_power() {
        let f3 = FiniteField::prime(3).unwrap();
        let fac = factor(&f3, &p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[0, 1]), 3)]);
    }

    #[test]
    fn unit_is_leading_coefficient() {
        let f5 = FiniteField::prime(5).unwrap();
        let f = p(&[0, 3, 3]);
        let fac = factor(&f5, &f).unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(fac.reconstruct(&PolyRing::new(&f5)), f);
    }

    #[test]
    fn bounds() {
        let f2 = FiniteField::prime(2).unwrap();
        let mut nine = vec![0; 9];
        nine.push(1);
        assert_eq!(factor(&f2, &p(&nine)), Err(Error::DegreeTooLarge(9)));
        assert_eq!(factor(&f2, &UniPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(factor(&f2, &p(&[1])).unwrap().factors, vec![]);
    }

    #[test]
    fn largest_field_degree_eight() {
        // product of two distinct quartics over GF(13^3) still factors quickly
        let f = FiniteField::of_size(2197).unwrap();
        let ring = PolyRing::new(&f);
        let a = p(&[5, 0, 0, 0, 1]);
        let b = p(&[7, 1, 0, 0, 1]);
        let fa = factor(&f, &a).unwrap();
        let prod = ring.mul(&a, &b);
        let fac = factor(&f, &prod).unwrap();
        assert_eq!(fac.reconstruct(&ring), prod);
        assert!(fac.distinct_count() >= fa.distinct_count());
    }
}
