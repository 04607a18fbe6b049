//! Associated primes and 0-th Bass numbers of monomial quotients `R/I`.
//!
//! Every associated prime of a monomial ideal is a variable prime `p_S`. Localizing
//! at `p_S` amounts to setting the variables outside `S` to 1; the residue field
//! `k(x_j : j ∉ S)` is never built because socles of monomial quotients have
//! monomial bases, so `μ₀(p_S, R/I)` is a count of socle monomials.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::monomial::{for_each_in_box, Monomial, MonomialIdeal, RingContext};

/// The prime `(x_i : i ∈ support)`; the empty support is the zero prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(support: impl IntoIterator<Item = usize>) -> Self {
        let support: BTreeSet<usize> = support.into_iter().collect();
        MonomialPrime {
            support: support.into_iter().collect(),
        }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn meets(&self, vars: &BTreeSet<usize>) -> bool {
        self.support.iter().any(|i| vars.contains(i))
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::prime(nvars, &self.support)
    }

    pub fn names(&self, ctx: &RingContext) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| ctx.names()[i].clone())
            .collect()
    }

    pub fn display(&self, ctx: &RingContext) -> String {
        if self.support.is_empty() {
            "(0)".to_string()
        } else {
            format!("({})", self.names(ctx).join(", "))
        }
    }
}

/// `I R_p` with the variables outside `p` inverted, as an ideal in the variables of `p`.
pub fn localized_ideal(ideal: &MonomialIdeal, prime: &MonomialPrime) -> MonomialIdeal {
    let s = prime.support();
    MonomialIdeal::from_generators_unchecked(
        s.len(),
        ideal.generators().iter().map(|g| g.restrict(s)).collect(),
    )
}

/// `μ₀(p, R/I)` together with its socle witnesses.
///
/// Witnesses are reported in the coordinates of the full ring (exponent 0 off `p`).
pub fn bass0(ideal: &MonomialIdeal, prime: &MonomialPrime) -> (usize, Vec<Monomial>) {
    let s = prime.support();
    let local = localized_ideal(ideal, prime);
    // A socle monomial u has x_i*u divisible by a generator g with g_i = u_i + 1,
    // so u_i < d_i.
    let bounds = local.max_exponents();
    let mut witnesses = Vec::new();
    let visit = |u: &Monomial| {
        if !local.contains(u) && (0..s.len()).all(|i| local.contains(&u.times_var(i))) {
            witnesses.push(u.embed(ideal.var_count(), s));
        }
    };
    // with no variables the box is the single monomial 1
    for_each_in_box(&bounds, visit);
    (witnesses.len(), witnesses)
}

/// Associated primes read off the irredundant decomposition: the supports of its components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    let d = decompose(ideal)?;
    Ok(d.components()
        .iter()
        .map(|c| MonomialPrime::new(c.support()))
        .collect())
}

/// Associated primes by brute force: the primes of the form `I : u` for a monomial `u`.
pub fn ass_by_colon_scan(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut found = BTreeSet::new();
    let bounds: Vec<u32> = ideal.max_exponents().iter().map(|d| d + 1).collect();
    for_each_in_box(&bounds, |u| {
        let colon = ideal.colon(u);
        if colon.is_unit() {
            return;
        }
        if colon.generators().iter().all(|g| g.degree() == 1) {
            let support = colon.generators().iter().flat_map(|g| g.support());
            found.insert(MonomialPrime::new(support));
        }
    });
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BassEntry {
    pub mu0: usize,
    pub witnesses: Vec<Monomial>,
}

/// Associated primes with their `μ₀` values and the resulting index `Σ μ₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BassReport {
    pub ideal: MonomialIdeal,
    pub entries: BTreeMap<MonomialPrime, BassEntry>,
    pub ir_by_formula: usize,
}

impl BassReport {
    pub fn mu0(&self, prime: &MonomialPrime) -> usize {
        self.entries.get(prime).map_or(0, |e| e.mu0)
    }
}

/// `ir(R/I) = Σ_{p ∈ Ass} μ₀(p, R/I)`.
pub fn reducibility_index_by_bass(ideal: &MonomialIdeal) -> Result<BassReport> {
    let ass = associated_primes(ideal)?;
    let entries: BTreeMap<MonomialPrime, BassEntry> = ass
        .into_iter()
        .map(|p| {
            let (mu0, witnesses) = bass0(ideal, &p);
            (p, BassEntry { mu0, witnesses })
        })
        .collect();
    let ir_by_formula = entries.values().map(|e| e.mu0).sum();
    Ok(BassReport {
        ideal: ideal.clone(),
        entries,
        ir_by_formula,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrOneVerdict {
    pub holds: bool,
    pub reason: String,
}

/// `ir(R/I) = 1` iff there is a single associated prime and its `μ₀` is 1.
pub fn is_ir_one(ideal: &MonomialIdeal) -> Result<IrOneVerdict> {
    let report = reducibility_index_by_bass(ideal)?;
    let count = report.entries.len();
    if count != 1 {
        return Ok(IrOneVerdict {
            holds: false,
            reason: format!("{} associated primes", count_word(count)),
        });
    }
    let mu0 = report.entries.values().next().map_or(0, |e| e.mu0);
    Ok(IrOneVerdict {
        holds: mu0 == 1,
        reason: if mu0 == 1 {
            "single associated prime with mu0=1".to_string()
        } else {
            format!("mu0={mu0}")
        },
    })
}

fn count_word(n: usize) -> String {
    const WORDS: [&str; 10] = [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    ];
    WORDS
        .get(n)
        .map_or_else(|| n.to_string(), |w| w.to_string())
}
