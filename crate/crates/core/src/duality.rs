//! Finite-length duality for monomial quotients.
//!
//! For `M = R/I` of finite length the standard monomials `Γ` form a basis, and the
//! dual `D(M)` has the dual basis `{u* : u ∈ Γ}` with the reversed action
//! `x_i · u* = (u/x_i)*` (zero when `x_i ∤ u`). Submodules of `D(M)` spanned by dual
//! basis vectors are exactly the downsets of `Γ`; the cyclic submodule generated by
//! `u*` is the set of divisors of `u`. The minimal generators of `D(M)` are the
//! maximal elements of `Γ`, i.e. the socle monomials of `M`.

use std::collections::BTreeSet;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use crate::bass::reducibility_index_by_bass;
use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingContext};

/// Largest staircase for the minimum-cover search.
pub const MIN_COVER_CAP: usize = 25;
/// Largest staircase for enumerating every irredundant cover.
pub const ALL_COVERS_CAP: usize = 12;
/// Largest staircase for enumerating all downsets.
pub const DOWNSET_ENUMERATION_CAP: usize = 20;

/// A finite order ideal of monomials (closed under taking divisors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    nvars: usize,
    elems: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Staircase {
    /// The standard monomials of a finite-colength ideal.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let elems = ideal.standard_monomials()?;
        Self::from_monomials(ideal.var_count(), elems)
    }

    /// Builds a staircase from monomials, checking closure under divisors.
    pub fn from_monomials(nvars: usize, elems: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let elems: Vec<Monomial> = elems
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(u) = elems.iter().find(|u| u.var_count() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: u.var_count(),
            });
        }
        let index: HashMap<Monomial, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, u)| (u, i))
            .collect();
        for u in &elems {
            for i in 0..nvars {
                if let Some(v) = u.div_var(i) {
                    if !index.contains_key(&v) {
                        return Err(Error::NotOrderIdeal(format!(
                            "{u} is present but its divisor {v} is not"
                        )));
                    }
                }
            }
        }
        Ok(Staircase {
            nvars,
            elems,
            index,
        })
    }

    pub fn var_count(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.elems
    }

    pub fn index_of(&self, u: &Monomial) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.index.contains_key(u)
    }

    /// The ideal whose standard monomials are this staircase.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .elems
            .iter()
            .flat_map(|u| (0..self.nvars).map(move |i| u.times_var(i)))
            .filter(|v| !self.contains(v))
            .collect::<Vec<_>>();
        if self.elems.is_empty() {
            return MonomialIdeal::unit(self.nvars);
        }
        MonomialIdeal::from_generators_unchecked(self.nvars, gens)
    }

    /// `{u ∈ Γ : x_i u ∉ Γ for all i}`.
    pub fn maximal_elements(&self) -> Vec<Monomial> {
        self.elems
            .iter()
            .filter(|u| (0..self.nvars).all(|i| !self.contains(&u.times_var(i))))
            .cloned()
            .collect()
    }

    /// The cyclic submodule generated by `u*`: all divisors of `u`.
    pub fn principal_downset(&self, u: &Monomial) -> Result<DownsetSubmodule> {
        if !self.contains(u) {
            return Err(Error::NotInStaircase);
        }
        let mut members = FixedBitSet::with_capacity(self.len());
        for (k, v) in self.elems.iter().enumerate() {
            if v.divides_unchecked(u) {
                members.insert(k);
            }
        }
        Ok(DownsetSubmodule { members })
    }

    pub fn full(&self) -> DownsetSubmodule {
        let mut members = FixedBitSet::with_capacity(self.len());
        members.insert_range(..);
        DownsetSubmodule { members }
    }

    pub fn empty_downset(&self) -> DownsetSubmodule {
        DownsetSubmodule {
            members: FixedBitSet::with_capacity(self.len()),
        }
    }

    /// The downset with the given members; fails if it is not closed under divisors.
    pub fn downset(&self, members: impl IntoIterator<Item = Monomial>) -> Result<DownsetSubmodule> {
        let mut set = FixedBitSet::with_capacity(self.len());
        for u in members {
            set.insert(self.index_of(&u).ok_or(Error::NotInStaircase)?);
        }
        let d = DownsetSubmodule { members: set };
        if !self.is_downset(&d.members) {
            return Err(Error::NotOrderIdeal(
                "subset is not closed under divisors".into(),
            ));
        }
        Ok(d)
    }

    fn is_downset(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|k| {
            (0..self.nvars).all(|i| {
                self.elems[k]
                    .div_var(i)
                    .is_none_or(|v| set.contains(self.index[&v]))
            })
        })
    }

    /// Every downset of `Γ`.
    pub fn all_downsets(&self) -> Result<Vec<DownsetSubmodule>> {
        if self.len() > DOWNSET_ENUMERATION_CAP {
            return Err(Error::TooLarge(format!(
                "staircase of size {} exceeds the downset enumeration cap {DOWNSET_ENUMERATION_CAP}",
                self.len()
            )));
        }
        let n = self.len();
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let mut set = FixedBitSet::with_capacity(n);
            for k in 0..n {
                if mask >> k & 1 == 1 {
                    set.insert(k);
                }
            }
            if self.is_downset(&set) {
                out.push(DownsetSubmodule { members: set });
            }
        }
        Ok(out)
    }

    /// Text grid for two-variable staircases (`#` in `Γ`, `*` maximal, `.` outside),
    /// first variable to the right and second variable upward.
    pub fn render_grid(&self) -> Option<Vec<String>> {
        if self.nvars != 2 || self.is_empty() {
            return None;
        }
        let maximal: BTreeSet<Monomial> = self.maximal_elements().into_iter().collect();
        let width = self.elems.iter().map(|u| u.exponent(0)).max()? + 1;
        let height = self.elems.iter().map(|u| u.exponent(1)).max()? + 1;
        let rows = (0..height)
            .rev()
            .map(|b| {
                (0..width)
                    .map(|a| {
                        let u = Monomial::from_exponents(vec![a, b]);
                        if maximal.contains(&u) {
                            '*'
                        } else if self.contains(&u) {
                            '#'
                        } else {
                            '.'
                        }
                    })
                    .collect()
            })
            .collect();
        Some(rows)
    }

    pub fn display_monomials(&self, ctx: &RingContext, set: &DownsetSubmodule) -> Vec<String> {
        set.members
            .ones()
            .map(|k| ctx.fmt_monomial(&self.elems[k]))
            .collect()
    }
}

/// A submodule of `D(M)` spanned by the dual basis vectors of a downset of `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DownsetSubmodule {
    members: FixedBitSet,
}

impl DownsetSubmodule {
    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains_index(&self, k: usize) -> bool {
        self.members.contains(k)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn monomials<'a>(&'a self, g: &'a Staircase) -> impl Iterator<Item = &'a Monomial> + 'a {
        self.members.ones().map(move |k| &g.elems[k])
    }

    pub fn union(&self, other: &DownsetSubmodule) -> DownsetSubmodule {
        let mut members = self.members.clone();
        members.union_with(&other.members);
        DownsetSubmodule { members }
    }
}

/// `D(M)` written as a sum of cyclic (hence sum-irreducible) submodules.
#[derive(Debug, Clone)]
pub struct SumRepresentation {
    pub generators: Vec<Monomial>,
    pub parts: Vec<DownsetSubmodule>,
}

impl SumRepresentation {
    /// The sum-reducibility index `ir′(D(M))`.
    pub fn ir_prime(&self) -> usize {
        self.parts.len()
    }
}

/// One principal downset per maximal element; their union is `Γ`.
pub fn sum_irreducible_representation(g: &Staircase) -> Result<SumRepresentation> {
    if g.is_empty() {
        return Err(Error::EmptyStaircase);
    }
    let generators = g.maximal_elements();
    let parts = generators
        .iter()
        .map(|u| g.principal_downset(u))
        .collect::<Result<Vec<_>>>()?;
    Ok(SumRepresentation { generators, parts })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverOracle {
    /// Fewest principal downsets covering `Γ`.
    pub minimum: usize,
    /// Distinct sizes of all irredundant covers, when `|Γ|` is within [`ALL_COVERS_CAP`].
    pub irredundant_cover_sizes: Option<Vec<usize>>,
    pub irredundant_cover_count: Option<usize>,
}

impl CoverOracle {
    /// All irredundant covers have the same size (vacuous when not enumerated).
    pub fn covers_equicardinal(&self) -> bool {
        self.irredundant_cover_sizes
            .as_ref()
            .is_none_or(|s| s.len() == 1)
    }
}

/// Brute-force search over subsets of `Γ` for covers by principal downsets.
pub fn min_cover_oracle(g: &Staircase) -> Result<CoverOracle> {
    let n = g.len();
    if n > MIN_COVER_CAP {
        return Err(Error::TooLarge(format!(
            "staircase of size {n} exceeds the cover search cap {MIN_COVER_CAP}"
        )));
    }
    if n == 0 {
        return Err(Error::EmptyStaircase);
    }
    let downsets: Vec<u32> = g
        .elems
        .iter()
        .map(|u| {
            g.elems
                .iter()
                .enumerate()
                .filter(|(_, v)| v.divides_unchecked(u))
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let union = |subset: &[usize]| subset.iter().fold(0u32, |m, &k| m | downsets[k]);

    let minimum = (1..=n)
        .find(|&r| (0..n).combinations(r).any(|c| union(&c) == full))
        .expect("Γ covers itself");

    let (sizes, count) = if n <= ALL_COVERS_CAP {
        let mut sizes = BTreeSet::new();
        let mut count = 0;
        for mask in 1u32..(1u32 << n) {
            let chosen: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            if union(&chosen) != full {
                continue;
            }
            let irredundant = (0..chosen.len()).all(|drop| {
                let rest: Vec<usize> = chosen
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != drop)
                    .map(|(_, &k)| k)
                    .collect();
                union(&rest) != full
            });
            if irredundant {
                sizes.insert(chosen.len());
                count += 1;
            }
        }
        (Some(sizes.into_iter().collect()), Some(count))
    } else {
        (None, None)
    };
    Ok(CoverOracle {
        minimum,
        irredundant_cover_sizes: sizes,
        irredundant_cover_count: count,
    })
}

/// The index computed along every available route for a finite-colength ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteLengthReport {
    pub length: usize,
    pub ir_by_decomposition: usize,
    pub ir_by_bass: usize,
    pub ir_prime: usize,
    pub min_cover: Option<usize>,
    pub covers_equicardinal: bool,
    pub passed: bool,
}

/// Checks `ir(M) = ir′(D(M))` for `M = R/I` of finite length.
///
/// In this graded finite-length setting completion does not change `M`, so the
/// general inequality `ir(M) <= ir′(D(M))` is an equality.
pub fn check_finite_length(ideal: &MonomialIdeal) -> Result<FiniteLengthReport> {
    let g = Staircase::from_ideal(ideal)?;
    if g.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let ir_by_decomposition = decompose(ideal)?.ir();
    let ir_by_bass = reducibility_index_by_bass(ideal)?.ir_by_formula;
    let ir_prime = sum_irreducible_representation(&g)?.ir_prime();
    let oracle = if g.len() <= MIN_COVER_CAP {
        Some(min_cover_oracle(&g)?)
    } else {
        None
    };
    let min_cover = oracle.as_ref().map(|o| o.minimum);
    let covers_equicardinal = oracle.as_ref().is_none_or(CoverOracle::covers_equicardinal);
    let passed = ir_by_decomposition == ir_by_bass
        && ir_by_bass == ir_prime
        && min_cover.is_none_or(|m| m == ir_prime)
        && covers_equicardinal;
    Ok(FiniteLengthReport {
        length: g.len(),
        ir_by_decomposition,
        ir_by_bass,
        ir_prime,
        min_cover,
        covers_equicardinal,
        passed,
    })
}

/// Both sides of `D(A/B) ∩ D(A/C) = 0 ⇔ A = B + C` for downsets `B, C` of `Γ`.
///
/// The left side collects the dual functionals `u*` with `u ∈ Γ` vanishing on both
/// `B` and `C`; the right side compares the union `B ∪ C` with `Γ`.
pub fn check_dual_sum_intersection(
    g: &Staircase,
    b: &DownsetSubmodule,
    c: &DownsetSubmodule,
) -> (bool, bool) {
    let annihilated_by_both: Vec<&Monomial> = g
        .elems
        .iter()
        .enumerate()
        .filter(|&(k, _)| !b.contains_index(k) && !c.contains_index(k))
        .map(|(_, u)| u)
        .collect();
    let left = annihilated_by_both.is_empty();
    let right = b.union(c) == g.full();
    (left, right)
}

/// Sides of "0 is irreducible in M ⇔ D(M) is sum-irreducible" for `M = R/I`.
pub fn sum_irreducible_iff_dual_irreducible(ideal: &MonomialIdeal) -> Result<(bool, bool)> {
    let g = Staircase::from_ideal(ideal)?;
    let left = decompose(ideal)?.ir() == 1;
    let right = g.maximal_elements().len() == 1;
    Ok((left, right))
}

/// The quotient `D(M)/B` for a downset `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub quotient_length: usize,
    /// Minimal generators of the quotient: `dim Q/mQ`, computed from the action.
    pub ir_prime_quotient: usize,
    pub ir_prime: usize,
    pub monotone: bool,
    /// Sum-irreducibility of `D(M)` passes to the (nonzero) quotient.
    pub irreducibility_inherited: bool,
}

/// Models `D(M)/B` on the basis `Γ ∖ B` with the induced reversed action and counts
/// its minimal generators as the basis vectors outside `m · (D(M)/B)`.
pub fn quotient_check(g: &Staircase, b: &DownsetSubmodule) -> QuotientReport {
    let outside: Vec<usize> = (0..g.len()).filter(|&k| !b.contains_index(k)).collect();
    // m·Q is spanned by x_i·u* = (u/x_i)* for u ∉ B, whenever u/x_i ∉ B.
    let mut m_times_q = FixedBitSet::with_capacity(g.len());
    for &k in &outside {
        for i in 0..g.nvars {
            if let Some(v) = g.elems[k].div_var(i) {
                let j = g.index[&v];
                if !b.contains_index(j) {
                    m_times_q.insert(j);
                }
            }
        }
    }
    let ir_prime_quotient = outside.iter().filter(|&&k| !m_times_q.contains(k)).count();
    let ir_prime = g.maximal_elements().len();
    QuotientReport {
        quotient_length: outside.len(),
        ir_prime_quotient,
        ir_prime,
        monotone: ir_prime_quotient <= ir_prime,
        irreducibility_inherited: ir_prime != 1 || ir_prime_quotient <= 1,
    }
}

/// All order ideals in `n` variables with at most `max_size` elements (including `{1}`).
pub fn staircases_up_to(n: usize, max_size: usize) -> Vec<Staircase> {
    let mut seen: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    let mut frontier = vec![vec![Monomial::one(n)]];
    while let Some(cur) = frontier.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        if cur.len() == max_size {
            continue;
        }
        let set: BTreeSet<&Monomial> = cur.iter().collect();
        let mut corners: BTreeSet<Monomial> = BTreeSet::new();
        for u in &cur {
            for i in 0..n {
                let v = u.times_var(i);
                if !set.contains(&v)
                    && (0..n).all(|j| v.div_var(j).is_none_or(|w| set.contains(&w)))
                {
                    corners.insert(v);
                }
            }
        }
        for v in corners {
            let mut next = cur.clone();
            next.push(v);
            next.sort();
            if !seen.contains(&next) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter()
        .map(|elems| Staircase::from_monomials(n, elems).expect("order ideal by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens[0].len(), gens).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn example() -> Staircase {
        Staircase::from_ideal(&ideal(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap()
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(
            example().monomials(),
            &[m(&[0, 0]), m(&[0, 1]), m(&[0, 2]), m(&[1, 0])]
        );
        let max = Staircase::from_ideal(&MonomialIdeal::prime(2, &[0, 1])).unwrap();
        assert_eq!(max.monomials(), &[m(&[0, 0])]);
        let chain = Staircase::from_ideal(&ideal(&[&[3]])).unwrap();
        assert_eq!(chain.monomials(), &[m(&[0]), m(&[1]), m(&[2])]);
        assert_eq!(
            Staircase::from_ideal(&ideal(&[&[2, 0]])),
            Err(Error::InfiniteColength)
        );
        assert!(matches!(
            Staircase::from_monomials(2, vec![m(&[1, 0])]),
            Err(Error::NotOrderIdeal(_))
        ));
    }

    #[test]
    fn maximal_examples() {
        assert_eq!(example().maximal_elements(), vec![m(&[0, 2]), m(&[1, 0])]);
        let one = Staircase::from_monomials(2, vec![m(&[0, 0])]).unwrap();
        assert_eq!(one.maximal_elements(), vec![m(&[0, 0])]);
        let chain = Staircase::from_ideal(&ideal(&[&[3]])).unwrap();
        assert_eq!(chain.maximal_elements(), vec![m(&[2])]);
    }

    #[test]
    fn principal_downset_examples() {
        let g = example();
        let d = g.principal_downset(&m(&[0, 2])).unwrap();
        assert_eq!(
            d.monomials(&g).cloned().collect::<Vec<_>>(),
            vec![m(&[0, 0]), m(&[0, 1]), m(&[0, 2])]
        );
        assert_eq!(g.principal_downset(&m(&[0, 0])).unwrap().len(), 1);
        assert_eq!(g.principal_downset(&m(&[1, 0])).unwrap().len(), 2);
        assert_eq!(g.principal_downset(&m(&[1, 1])), Err(Error::NotInStaircase));
    }

    #[test]
    fn representation_examples() {
        let rep = sum_irreducible_representation(&example()).unwrap();
        assert_eq!(rep.ir_prime(), 2);
        assert_eq!(rep.parts[0].len() + rep.parts[1].len(), 5);
        let one = Staircase::from_ideal(&MonomialIdeal::prime(2, &[0, 1])).unwrap();
        assert_eq!(sum_irreducible_representation(&one).unwrap().ir_prime(), 1);
        let square = Staircase::from_ideal(&ideal(&[&[2, 0], &[0, 2]])).unwrap();
        let rep = sum_irreducible_representation(&square).unwrap();
        assert_eq!(rep.generators, vec![m(&[1, 1])]);
        let empty = Staircase::from_ideal(&MonomialIdeal::unit(2)).unwrap();
        assert!(matches!(
            sum_irreducible_representation(&empty),
            Err(Error::EmptyStaircase)
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(min_cover_oracle(&example()).unwrap().minimum, 2);
        let one = Staircase::from_monomials(1, vec![m(&[0])]).unwrap();
        assert_eq!(min_cover_oracle(&one).unwrap().minimum, 1);
        let chain = Staircase::from_ideal(&ideal(&[&[3]])).unwrap();
        let o = min_cover_oracle(&chain).unwrap();
        assert_eq!(o.minimum, 1);
        assert_eq!(o.irredundant_cover_sizes, Some(vec![1]));
        let big = Staircase::from_ideal(&ideal(&[&[26]])).unwrap();
        assert!(matches!(min_cover_oracle(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn finite_length_examples() {
        let r = check_finite_length(&ideal(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap();
        assert_eq!(
            (r.ir_by_decomposition, r.ir_by_bass, r.ir_prime, r.min_cover),
            (2, 2, 2, Some(2))
        );
        assert!(r.passed);
        let r = check_finite_length(&MonomialIdeal::prime(2, &[0, 1])).unwrap();
        assert_eq!((r.ir_by_decomposition, r.ir_prime), (1, 1));
        let i = ideal(&[&[3, 0], &[2, 2], &[0, 3]]);
        let r = check_finite_length(&i).unwrap();
        assert_eq!((r.ir_by_bass, r.ir_prime, r.min_cover), (2, 2, Some(2)));
        assert_eq!(
            Staircase::from_ideal(&i).unwrap().maximal_elements(),
            vec![m(&[1, 2]), m(&[2, 1])]
        );
    }

    #[test]
    fn dual_sum_intersection_examples() {
        let g = example();
        let b = g.principal_downset(&m(&[1, 0])).unwrap();
        let c = g.principal_downset(&m(&[0, 2])).unwrap();
        assert_eq!(check_dual_sum_intersection(&g, &b, &c), (true, true));

        let g2 = Staircase::from_monomials(1, vec![m(&[0]), m(&[1])]).unwrap();
        let one = g2.principal_downset(&m(&[0])).unwrap();
        assert_eq!(check_dual_sum_intersection(&g2, &one, &one), (false, false));

        assert_eq!(
            check_dual_sum_intersection(&g, &g.full(), &g.empty_downset()),
            (true, true)
        );
    }

    #[test]
    fn irreducible_iff_examples() {
        assert_eq!(
            sum_irreducible_iff_dual_irreducible(&ideal(&[&[2, 0], &[0, 2]])).unwrap(),
            (true, true)
        );
        assert_eq!(
            sum_irreducible_iff_dual_irreducible(&ideal(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap(),
            (false, false)
        );
        assert_eq!(
            sum_irreducible_iff_dual_irreducible(&MonomialIdeal::prime(2, &[0, 1])).unwrap(),
            (true, true)
        );
    }

    #[test]
    fn quotient_by_downset() {
        let g = example();
        let b = g.principal_downset(&m(&[0, 2])).unwrap();
        let q = quotient_check(&g, &b);
        assert_eq!(
            (q.quotient_length, q.ir_prime_quotient, q.ir_prime),
            (1, 1, 2)
        );
        assert!(q.monotone);
        let q = quotient_check(&g, &g.empty_downset());
        assert_eq!(q.ir_prime_quotient, 2);
    }

    #[test]
    fn grid_rendering() {
        let rows = example().render_grid().unwrap();
        assert_eq!(rows, vec!["*.", "#.", "#*"]);
    }

    #[test]
    fn staircase_enumeration_counts() {
        // partitions of 0..=5 excluding the empty one: 1+2+3+5+7
        assert_eq!(staircases_up_to(2, 5).len(), 18);
        // plane partitions of 1..=4: 1+3+6+13
        assert_eq!(staircases_up_to(3, 4).len(), 23);
    }

    #[test]
    fn round_trip_to_ideal() {
        let i = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(Staircase::from_ideal(&i).unwrap().to_ideal(), i);
    }
}
