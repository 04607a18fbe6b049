//! Monomials and monomial ideals in `k[x_1, ..., x_n]`.
//!
//! The coefficient field never appears: every computation here depends only
//! on exponent vectors. Ideals are kept in canonical form (minimal generators
//! sorted lexicographically), so ideal equality is plain `==`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest exponent accepted from user input.
pub const MAX_EXPONENT: u32 = 1_000_000;

/// Variable names of the ambient polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        Ok(RingContext { names })
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn var_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring with `extra` fresh variables appended.
    pub fn extend(&self, extra: usize) -> RingContext {
        let mut names = self.names.clone();
        let mut counter = 1;
        while names.len() < self.names.len() + extra {
            let candidate = format!("t{counter}");
            counter += 1;
            if !names.contains(&candidate) {
                names.push(candidate);
            }
        }
        RingContext { names }
    }

    /// The ring on the variables at the given (sorted) indices.
    pub fn restrict(&self, indices: &[usize]) -> Option<RingContext> {
        if indices.is_empty() {
            return None;
        }
        Some(RingContext {
            names: indices.iter().map(|&i| self.names[i].clone()).collect(),
        })
    }

    pub fn fmt_monomial(&self, u: &Monomial) -> String {
        let parts: Vec<String> = u
            .exponents()
            .iter()
            .zip(&self.names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn fmt_ideal(&self, ideal: &MonomialIdeal) -> String {
        let gens: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| self.fmt_monomial(g))
            .collect();
        format!("({})", gens.join(", "))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An exponent vector. The derived ordering is lexicographic on exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exps.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentTooLarge(e as u64));
        }
        Ok(Monomial { exps })
    }

    /// Builds a monomial without the exponent guard; callers keep exponents small.
    pub(crate) fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn var_count(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// `Some(i)` when the monomial is a positive power of the single variable `x_i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let support = self.support();
        (support.len() == 1).then(|| support[0])
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dims(self.var_count(), other.var_count())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.var_count(), other.var_count());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.var_count(), other.var_count());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Multiplies by the variable `x_i`.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// Divides by `x_i`, if it divides.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    /// Restricts to the coordinates in `indices` (sets the others to 1).
    pub fn restrict(&self, indices: &[usize]) -> Monomial {
        Monomial {
            exps: indices.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    /// Appends `extra` zero exponents.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(self.exps.len() + extra, 0);
        Monomial { exps }
    }

    /// Places the exponents at `indices` inside an `n`-variable monomial.
    pub fn embed(&self, n: usize, indices: &[usize]) -> Monomial {
        let mut exps = vec![0; n];
        for (&i, &e) in indices.iter().zip(&self.exps) {
            exps[i] = e;
        }
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = RingContext::numbered(self.exps.len().max(1)).map_err(|_| fmt::Error)?;
        f.write_str(&ctx.fmt_monomial(self))
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A monomial ideal in canonical form.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonical ideal generated by `gens` (same as [`minimalize`]).
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(nvars, gens)
    }

    /// Ideal from raw exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The prime `(x_i : i in support)`.
    pub fn prime(nvars: usize, support: &[usize]) -> Self {
        let gens = support
            .iter()
            .map(|&i| Monomial::pure_power(nvars, i, 1))
            .collect();
        minimalize_unchecked(nvars, gens)
    }

    pub(crate) fn from_generators_unchecked(nvars: usize, gens: Vec<Monomial>) -> Self {
        minimalize_unchecked(nvars, gens)
    }

    pub fn var_count(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        debug_assert_eq!(u.var_count(), self.nvars);
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// `I : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        minimalize_unchecked(
            self.nvars,
            self.gens.iter().map(|g| g.quotient_by_gcd(u)).collect(),
        )
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        minimalize_unchecked(self.nvars, lcms)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.nvars, other.nvars);
        minimalize_unchecked(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        )
    }

    /// `I + (u)`.
    pub fn add_generator(&self, u: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(u);
        minimalize_unchecked(self.nvars, gens)
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Exponent of the pure power of `x_i` among the generators, if any.
    pub fn pure_power_exponent(&self, i: usize) -> Option<u32> {
        if self.is_unit() {
            return Some(0);
        }
        self.gens
            .iter()
            .find(|g| g.pure_power_var() == Some(i))
            .map(|g| g.exponent(i))
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut d = vec![0; self.nvars];
        for g in &self.gens {
            for (slot, &e) in d.iter_mut().zip(g.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        d
    }

    pub fn is_finite_colength(&self) -> bool {
        (0..self.nvars).all(|i| self.pure_power_exponent(i).is_some())
    }

    /// Monomials outside the ideal, in lexicographic order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_finite_colength() {
            return Err(Error::InfiniteColength);
        }
        let bounds: Vec<u32> = (0..self.nvars)
            .map(|i| self.pure_power_exponent(i).unwrap_or(0))
            .collect();
        let mut out = Vec::new();
        for_each_in_box(&bounds, |u| {
            if !self.contains(u) {
                out.push(u.clone());
            }
        });
        Ok(out)
    }

    /// Same generators in a ring with `extra` more variables.
    pub fn extend(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars + extra,
            gens: self.gens.iter().map(|g| g.extend(extra)).collect(),
        }
    }
}

/// Calls `f` on every monomial with `u_i < bounds[i]`, in lexicographic order.
pub fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&Monomial)) {
    if bounds.contains(&0) {
        return;
    }
    let n = bounds.len();
    let mut cur = Monomial::one(n);
    loop {
        f(&cur);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cur.exps[i] += 1;
            if cur.exps[i] < bounds[i] {
                break;
            }
            cur.exps[i] = 0;
        }
    }
}

/// The canonical (minimal, sorted) generating set of the ideal generated by `gens`.
pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        check_dims(nvars, g.var_count())?;
        if let Some(&e) = g.exps.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentTooLarge(e as u64));
        }
    }
    Ok(minimalize_unchecked(nvars, gens))
}

fn minimalize_unchecked(nvars: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort_by_key(|g| g.degree());
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|h| h.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    // descending lex, so x^2, x*y, y^3 print in that order
    kept.sort_by(|a, b| b.cmp(a));
    MonomialIdeal { nvars, gens: kept }
}
