//! One-variable hypersurfaces `F_q[x]/(f)` and the field extension `F_p -> F_{p^k}`.
//!
//! Here `Ass(S/fS)` is the set of distinct irreducible factors of `f`, and each
//! localization is a Gorenstein Artinian ring, so every `μ₀` equals 1 and the
//! reducibility index is the number of distinct irreducible factors.

pub mod factor;
pub mod field;
pub mod poly;

pub use factor::{factor, Factorization, TrialDivision};
pub use field::FiniteField;
pub use poly::{PolyRing, UniPoly};

use crate::base_change::{BaseChangeKind, BaseChangeReport, FiberEntry};
use crate::error::{Error, Result};

/// Largest degree accepted by [`factor`].
pub const MAX_FACTOR_DEGREE: usize = 8;
/// Largest field size accepted by [`factor`].
pub const MAX_FIELD_SIZE: u32 = field::MAX_FIELD_SIZE;

/// `ir(S/fS)`: the number of distinct irreducible factors of `f`.
pub fn ir_hypersurface(field: &FiniteField, f: &UniPoly) -> Result<usize> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::UnitInput),
        Some(_) => Ok(factor(field, f)?.distinct_count()),
    }
}

/// Reads a polynomial over `F_p` as a polynomial over an extension of `F_p`.
pub fn embed(base: &FiniteField, ext: &FiniteField, f: &UniPoly) -> Result<UniPoly> {
    check_extension(base, ext)?;
    // F_p is encoded as 0..p in every extension
    Ok(f.clone())
}

fn check_extension(base: &FiniteField, ext: &FiniteField) -> Result<()> {
    if !base.is_prime_field() {
        return Err(Error::FieldMismatch(
            "base field must be a prime field".into(),
        ));
    }
    if base.characteristic() != ext.characteristic() {
        return Err(Error::FieldMismatch(format!(
            "GF({}) is not contained in GF({})",
            base.size(),
            ext.size()
        )));
    }
    Ok(())
}

/// Base change of `F_p[x]/(f)` along `F_p -> ext`.
///
/// The direct side factors the embedded `f` over `ext`; the formula side sums, over
/// the distinct factors `p_i` of `f`, the number of distinct factors of `p_i` over
/// `ext` (each `μ₀` is 1).
pub fn base_change_field(
    base: &FiniteField,
    ext: &FiniteField,
    f: &UniPoly,
) -> Result<BaseChangeReport> {
    check_extension(base, ext)?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(if f.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::UnitInput
        });
    }
    let base_ring = PolyRing::new(base);
    let before = factor(base, f)?;
    let after = factor(ext, &embed(base, ext, f)?)?;
    let per_prime = before
        .factors
        .iter()
        .map(|(p, _)| {
            let fiber = factor(ext, &embed(base, ext, p)?)?;
            Ok(FiberEntry {
                prime: base_ring.display(p),
                // Gorenstein Artinian local fiber: the socle is one-dimensional.
                mu0: 1,
                ir_of_fiber: fiber.distinct_count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BaseChangeReport::assemble(
        BaseChangeKind::FieldExtension,
        before.distinct_count(),
        after.distinct_count(),
        per_prime,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> UniPoly {
        UniPoly::new(c.to_vec())
    }

    #[test]
    fn hypersurface_examples() {
        let f5 = FiniteField::prime(5).unwrap();
        let f2 = FiniteField::prime(2).unwrap();
        assert_eq!(ir_hypersurface(&f5, &p(&[0, 0, 0, 1])).unwrap(), 1);
        assert_eq!(ir_hypersurface(&f2, &p(&[0, 1, 1])).unwrap(), 2);
        assert_eq!(ir_hypersurface(&f2, &p(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(ir_hypersurface(&f2, &p(&[1])), Err(Error::UnitInput));
    }

    #[test]
    fn field_extension_examples() {
        let f2 = FiniteField::prime(2).unwrap();
        let f4 = FiniteField::of_size(4).unwrap();

        let r = base_change_field(&f2, &f4, &p(&[1, 1, 1])).unwrap();
        assert_eq!((r.ir_before, r.ir_after, r.t_bound), (1, 2, 2));
        assert_eq!(r.verdict.chain, Some(true));
        assert!(r.passed());
        assert_ne!(r.ir_before, r.ir_after);

        let r = base_change_field(&f2, &f4, &p(&[0, 1, 1])).unwrap();
        assert_eq!((r.ir_before, r.ir_after), (2, 2));
        assert!(r.passed());

        // (x^2 + x + 1) x
        let r = base_change_field(&f2, &f4, &p(&[0, 1, 1, 1])).unwrap();
        assert_eq!((r.ir_before, r.ir_after, r.formula_side), (2, 3, 3));
        assert!(r.passed());
    }

    #[test]
    fn mismatched_characteristic() {
        let f3 = FiniteField::prime(3).unwrap();
        let f4 = FiniteField::of_size(4).unwrap();
        assert!(matches!(
            base_change_field(&f3, &f4, &p(&[0, 1])),
            Err(Error::FieldMismatch(_))
        ));
    }
}
