//! Flat base change of monomial quotients: adjoining variables and inverting variables.
//!
//! For a flat map `R -> S` the index transforms as
//! `ir_S(S ⊗ M) = Σ_{p ∈ Ass M} ir(S/pS) · μ₀(p, M)`. Both maps here send a
//! variable prime `p` either to a prime (fiber index 1) or to the unit ideal
//! (fiber index 0), so every term is computable from monomial data.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bass::{localized_ideal, reducibility_index_by_bass, MonomialPrime};
use crate::decompose::reducibility_index_by_decomposition;
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, RingContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseChangeKind {
    PolynomialExtension,
    Localization,
    FieldExtension,
}

impl BaseChangeKind {
    pub fn is_faithfully_flat(self) -> bool {
        !matches!(self, BaseChangeKind::Localization)
    }
}

/// One associated prime (or irreducible factor) and its fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberEntry {
    pub prime: String,
    pub mu0: usize,
    pub ir_of_fiber: usize,
}

/// Which clauses of the base-change law held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// `ir_after = Σ ir_of_fiber · μ₀`.
    pub formula: bool,
    /// `ir_before <= ir_after <= t · ir_before`; `None` when the map is not faithfully flat.
    pub chain: Option<bool>,
    /// `ir_before = ir_after` iff every fiber has index 1.
    pub equality_criterion: bool,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.formula && self.chain.unwrap_or(true) && self.equality_criterion
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseChangeReport {
    pub kind: BaseChangeKind,
    pub ir_before: usize,
    /// Computed directly in the target ring.
    pub ir_after: usize,
    /// `Σ ir_of_fiber · μ₀` over the fibers.
    pub formula_side: usize,
    pub t_bound: usize,
    pub per_prime: Vec<FiberEntry>,
    pub verdict: Verdict,
}

impl BaseChangeReport {
    pub(crate) fn assemble(
        kind: BaseChangeKind,
        ir_before: usize,
        ir_after: usize,
        per_prime: Vec<FiberEntry>,
    ) -> Self {
        let formula_side = per_prime.iter().map(|e| e.ir_of_fiber * e.mu0).sum();
        let t_bound = per_prime.iter().map(|e| e.ir_of_fiber).max().unwrap_or(0);
        let chain = kind
            .is_faithfully_flat()
            .then(|| ir_before <= ir_after && ir_after <= t_bound * ir_before);
        let all_fibers_irreducible = per_prime.iter().all(|e| e.ir_of_fiber == 1);
        BaseChangeReport {
            kind,
            ir_before,
            ir_after,
            formula_side,
            t_bound,
            per_prime,
            verdict: Verdict {
                formula: formula_side == ir_after,
                chain,
                equality_criterion: (ir_before == ir_after) == all_fibers_irreducible,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// A base change expressible on monomial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseChange {
    /// Adjoin this many new variables.
    Extend(usize),
    /// Invert the variables at these indices.
    Invert(BTreeSet<usize>),
}

impl BaseChange {
    /// Parses `extend:2` or `invert:y,z`.
    pub fn parse(descriptor: &str, ctx: &RingContext) -> Result<Self> {
        let descriptor = descriptor.trim();
        let bad = |msg: String| Error::parse(1, 1, msg);
        if let Some(rest) = descriptor.strip_prefix("extend:") {
            let extra: usize = rest
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad variable count {rest:?}")))?;
            if extra == 0 {
                return Err(bad("extend needs a positive count".into()));
            }
            Ok(BaseChange::Extend(extra))
        } else if let Some(rest) = descriptor.strip_prefix("invert:") {
            let mut vars = BTreeSet::new();
            for name in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let i = ctx
                    .index_of(name)
                    .ok_or_else(|| bad(format!("unknown variable {name}")))?;
                vars.insert(i);
            }
            Ok(BaseChange::Invert(vars))
        } else {
            Err(bad(format!("unknown base change {descriptor:?}")))
        }
    }
}

/// `I · R[t_1, ..., t_extra]`.
pub fn extend_polynomial(ideal: &MonomialIdeal, extra: usize) -> MonomialIdeal {
    ideal.extend(extra)
}

/// `ir` with the convention that the unit ideal (zero module) has index 0.
fn ir_allowing_unit(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        Ok(0)
    } else {
        reducibility_index_by_decomposition(ideal)
    }
}

fn fibers(
    ideal: &MonomialIdeal,
    ctx: Option<&RingContext>,
    fiber_index: impl Fn(&MonomialPrime) -> usize,
) -> Result<Vec<FiberEntry>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let report = reducibility_index_by_bass(ideal)?;
    Ok(report
        .entries
        .iter()
        .map(|(p, entry)| FiberEntry {
            prime: match ctx {
                Some(ctx) => p.display(ctx),
                None => format!("{:?}", p.support()),
            },
            mu0: entry.mu0,
            ir_of_fiber: fiber_index(p),
        })
        .collect())
}

/// Localization at the multiplicative set generated by the variables in `inverted`.
///
/// The formula side sums `μ₀` over associated primes avoiding `inverted`; the direct
/// side decomposes the localized ideal in the remaining variables.
pub fn localize_index(
    ideal: &MonomialIdeal,
    inverted: &BTreeSet<usize>,
    ctx: Option<&RingContext>,
) -> Result<BaseChangeReport> {
    let n = ideal.var_count();
    let kept = MonomialPrime::new((0..n).filter(|i| !inverted.contains(i)));
    let ir_before = ir_allowing_unit(ideal)?;
    let local = localized_ideal(ideal, &kept);
    let ir_after = ir_allowing_unit(&local)?;
    let per_prime = fibers(ideal, ctx, |p| usize::from(!p.meets(inverted)))?;
    Ok(BaseChangeReport::assemble(
        BaseChangeKind::Localization,
        ir_before,
        ir_after,
        per_prime,
    ))
}

/// Checks the base-change law for `ideal` under `change`.
pub fn check_base_change(
    ideal: &MonomialIdeal,
    change: &BaseChange,
    ctx: Option<&RingContext>,
) -> Result<BaseChangeReport> {
    match change {
        BaseChange::Extend(extra) => {
            let ir_before = ir_allowing_unit(ideal)?;
            let ir_after = ir_allowing_unit(&extend_polynomial(ideal, *extra))?;
            // S/pS is a polynomial ring over R/p, a domain.
            let per_prime = fibers(ideal, ctx, |_| 1)?;
            Ok(BaseChangeReport::assemble(
                BaseChangeKind::PolynomialExtension,
                ir_before,
                ir_after,
                per_prime,
            ))
        }
        BaseChange::Invert(vars) => {
            if let Some(&bad) = vars.iter().find(|&&i| i >= ideal.var_count()) {
                return Err(Error::DimensionMismatch {
                    expected: ideal.var_count(),
                    found: bad + 1,
                });
            }
            localize_index(ideal, vars, ctx)
        }
    }
}
