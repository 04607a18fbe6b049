//! Dense univariate polynomials over a [`FiniteField`].

use std::cmp::Ordering;

use serde::Serialize;

use super::field::{fmt_dense, FiniteField};
use crate::error::{Error, Result};

/// Coefficients lowest degree first, with no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UniPoly {
    coeffs: Vec<u32>,
}

impl UniPoly {
    /// Normalizes away trailing zeros. Coefficients must already be field elements.
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: u32) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        UniPoly { coeffs: vec![0, 1] }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }
}

/// Canonical order: by degree, then by coefficients from the top down.
pub fn canonical_cmp(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

/// Polynomial arithmetic over a fixed field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a> {
    field: &'a FiniteField,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a FiniteField) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a FiniteField {
        self.field
    }

    pub fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let get = |p: &UniPoly, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        UniPoly::new(
            (0..n)
                .map(|i| self.field.add(get(a, i), get(b, i)))
                .collect(),
        )
    }

    pub fn neg(&self, a: &UniPoly) -> UniPoly {
        UniPoly::new(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &UniPoly, c: u32) -> UniPoly {
        UniPoly::new(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() || b.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![0; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, a: &UniPoly, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::constant(1), |acc, _| self.mul(&acc, a))
    }

    /// Euclidean division `(quotient, remainder)`.
    pub fn divmod(&self, a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lead_inv = self
            .field
            .inv(b.leading())
            .ok_or(Error::DivisionByZeroPoly)?;
        let db = b.coeffs.len() - 1;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((UniPoly::zero(), a.clone()));
        }
        let mut quot = vec![0; rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = self.field.mul(rem[top], lead_inv);
            let shift = top - db;
            quot[shift] = c;
            if c != 0 {
                for (i, &bc) in b.coeffs.iter().enumerate() {
                    rem[shift + i] = self.field.sub(rem[shift + i], self.field.mul(c, bc));
                }
            }
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        self.divmod(a, b).map(|(_, r)| r)
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self, a: &UniPoly) -> UniPoly {
        match self.field.inv(a.leading()) {
            Some(inv) => self.scale(a, inv),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `base^e mod modulus`.
    pub fn pow_mod(&self, base: &UniPoly, mut e: u64, modulus: &UniPoly) -> Result<UniPoly> {
        let mut acc = self.rem(&UniPoly::constant(1), modulus)?;
        let mut b = self.rem(base, modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), modulus)?;
            }
            b = self.rem(&self.mul(&b, &b), modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Monic polynomials of degree `d` in enumeration order.
    pub fn monic_of_degree(&self, d: usize) -> impl Iterator<Item = UniPoly> + 'a {
        let q = self.field.size() as u64;
        let count = q.pow(d as u32);
        (0..count).map(move |mut index| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((index % q) as u32);
                index /= q;
            }
            coeffs.push(1);
            UniPoly::new(coeffs)
        })
    }

    /// Every nonzero polynomial of degree at most `d` (not only monic ones).
    pub fn nonzero_up_to_degree(&self, d: usize) -> impl Iterator<Item = UniPoly> + 'a {
        let q = self.field.size() as u64;
        let count = q.pow(d as u32 + 1);
        (1..count).map(move |mut index| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..=d {
                coeffs.push((index % q) as u32);
                index /= q;
            }
            UniPoly::new(coeffs)
        })
    }

    pub fn display(&self, a: &UniPoly) -> String {
        fmt_dense(a.coeffs(), "x", |c| {
            let s = self.field.fmt_element(c);
            if self.field.is_compound(c) {
                format!("({s})")
            } else {
                s
            }
        })
    }
}
