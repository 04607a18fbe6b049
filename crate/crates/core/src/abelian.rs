//! Finite abelian groups as Artinian `Z`-modules.
//!
//! A group is stored in primary form `⊕ Z/p^k`. Small groups (order at most 64) get
//! a full subgroup lattice with subgroups as 64-bit element masks, which backs the
//! brute-force sum-reducibility index. The closed form is `Σ_p rank_p(A)`, the
//! number of cyclic factors in the primary decomposition.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest group order for lattice-based operations.
pub const LATTICE_CAP: u64 = 64;
/// Largest group order for the quotient monotonicity sweep.
pub const QUOTIENT_CAP: u64 = 32;
/// Largest group order for element-level operations.
pub const ELEMENT_CAP: u64 = 1 << 16;

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

/// `(p, k)` with `n = p^k`, when `n` is a prime power.
fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let (mut rest, mut k) = (n, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        out.push((p, k));
    }
    out
}

/// A finite abelian group `Z/q_1 ⊕ ... ⊕ Z/q_r` with every `q_i` a prime power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// From prime-power cyclic orders.
    pub fn from_primary(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut orders: Vec<u64> = orders.into_iter().collect();
        for &q in &orders {
            if as_prime_power(q).is_none() {
                return Err(Error::InvalidGroup(format!(
                    "Z/{q} is not of prime-power order"
                )));
            }
        }
        orders.sort_by_key(|&q| {
            let (p, k) = as_prime_power(q).expect("checked");
            (p, std::cmp::Reverse(k))
        });
        Ok(FiniteAbelianGroup { orders })
    }

    /// From arbitrary cyclic orders, e.g. `Z/12 ≅ Z/4 ⊕ Z/3`. `Z/1` factors are dropped.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primary = Vec::new();
        for n in orders {
            if n == 0 {
                return Err(Error::InvalidGroup("Z/0 is infinite".into()));
            }
            primary.extend(factorize(n).into_iter().map(|(p, k)| p.pow(k)));
        }
        Self::from_primary(primary)
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// Primes dividing the order, ascending.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.orders
            .iter()
            .map(|&q| as_prime_power(q).expect("primary").0)
            .collect()
    }

    /// The `p`-primary part.
    pub fn p_part(&self, p: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup {
            orders: self
                .orders
                .iter()
                .copied()
                .filter(|&q| q % p == 0)
                .collect(),
        }
    }

    /// Number of cyclic factors of the `p`-part.
    pub fn rank_p(&self, p: u64) -> usize {
        self.orders.iter().filter(|&&q| q % p == 0).count()
    }

    pub(crate) fn coords(&self, mut index: usize) -> Vec<u64> {
        self.orders
            .iter()
            .map(|&q| {
                let c = index as u64 % q;
                index /= q as usize;
                c
            })
            .collect()
    }

    pub(crate) fn index(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .rev()
            .fold(0, |acc, (&c, &q)| acc * q as usize + c as usize)
    }

    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .zip(&self.orders)
            .map(|((x, y), q)| (x + y) % q)
            .collect();
        self.index(&sum)
    }

    pub(crate) fn scale(&self, m: u64, a: usize) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.orders)
            .map(|(x, q)| (x * (m % q)) % q)
            .collect();
        self.index(&c)
    }

    pub fn fmt_element(&self, a: usize) -> String {
        let c: Vec<String> = self.coords(a).iter().map(u64::to_string).collect();
        format!("({})", c.join(","))
    }

    fn check_element_cap(&self) -> Result<()> {
        if self.order() > ELEMENT_CAP {
            return Err(Error::TooLarge(format!(
                "group of order {} exceeds the element cap {ELEMENT_CAP}",
                self.order()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.orders.iter().map(|q| format!("Z/{q}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A subgroup, as the sorted indices of its elements in the parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    fn from_mask(mask: u64) -> Self {
        Subgroup {
            elements: (0..64).filter(|b| mask >> b & 1 == 1).collect(),
        }
    }

    fn to_mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << e)
    }
}

/// The complete subgroup lattice of a group of order at most 64.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: FiniteAbelianGroup,
    n: usize,
    add: Vec<Vec<u8>>,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl SubgroupLattice {
    /// Starts from the cyclic subgroups and closes under joins until nothing new appears.
    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        if group.order() > LATTICE_CAP {
            return Err(Error::TooLarge(format!(
                "group of order {} exceeds the lattice cap {LATTICE_CAP}",
                group.order()
            )));
        }
        let n = group.order() as usize;
        let add: Vec<Vec<u8>> = (0..n)
            .map(|a| (0..n).map(|b| group.add(a, b) as u8).collect())
            .collect();
        let mut lattice = SubgroupLattice {
            group: group.clone(),
            n,
            add,
            masks: Vec::new(),
            index: HashMap::new(),
        };
        let cyclic: BTreeSet<u64> = (0..n).map(|g| lattice.cyclic(g)).collect();
        let mut work: Vec<u64> = cyclic.iter().copied().collect();
        let mut seen: BTreeSet<u64> = cyclic.clone();
        while let Some(s) = work.pop() {
            for &c in &cyclic {
                let j = lattice.join(s, c);
                if seen.insert(j) {
                    work.push(j);
                }
            }
        }
        let mut masks: Vec<u64> = seen.into_iter().collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        lattice.index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        lattice.masks = masks;
        Ok(lattice)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn subgroups(&self) -> Vec<Subgroup> {
        self.masks.iter().map(|&m| Subgroup::from_mask(m)).collect()
    }

    pub fn subgroup(&self, i: usize) -> Subgroup {
        Subgroup::from_mask(self.masks[i])
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn cyclic(&self, g: usize) -> u64 {
        let mut mask = 1u64;
        let mut cur = g;
        while cur != 0 {
            mask |= 1 << cur;
            cur = self.add[cur][g] as usize;
        }
        mask
    }

    fn translate(&self, mask: u64, e: usize) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out |= 1 << self.add[b][e];
            m &= m - 1;
        }
        out
    }

    /// `H + K` for subgroups given as masks.
    fn join(&self, h: u64, k: u64) -> u64 {
        let mut out = 0;
        let mut m = k;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            if out >> e & 1 == 0 {
                out |= self.translate(h, e);
            }
            m &= m - 1;
        }
        out
    }

    fn mask_sum_irreducible(&self, h: u64) -> bool {
        if h == 1 {
            return false;
        }
        let proper: Vec<u64> = self
            .masks
            .iter()
            .copied()
            .filter(|&k| k & !h == 0 && k != h)
            .collect();
        // |K1 + K2| = |K1| |K2| / |K1 ∩ K2| in an abelian group
        let target = h.count_ones() as u64;
        for (i, &a) in proper.iter().enumerate() {
            for &b in &proper[i..] {
                let meet = (a & b).count_ones() as u64;
                if (a.count_ones() as u64) * (b.count_ones() as u64) == target * meet {
                    return false;
                }
            }
        }
        true
    }

    /// No two proper subgroups of `h` sum to `h`.
    pub fn is_sum_irreducible(&self, h: &Subgroup) -> Result<bool> {
        let mask = h.to_mask();
        if !self.index.contains_key(&mask) {
            return Err(Error::InvalidGroup("not a subgroup of this group".into()));
        }
        if mask == 1 {
            return Err(Error::TrivialGroup);
        }
        Ok(self.mask_sum_irreducible(mask))
    }

    /// Indices (into [`Self::subgroups`]) of the nontrivial sum-irreducible subgroups.
    pub fn sum_irreducible(&self) -> Vec<usize> {
        (0..self.masks.len())
            .filter(|&i| self.mask_sum_irreducible(self.masks[i]))
            .collect()
    }

    /// Calls `visit` once per irredundant representation of the whole group as a sum
    /// of sum-irreducible subgroups (indices into [`Self::subgroups`]).
    pub fn for_each_irredundant_representation(&self, mut visit: impl FnMut(&[usize])) {
        let irr = self.sum_irreducible();
        let irr_masks: Vec<u64> = irr.iter().map(|&i| self.masks[i]).collect();
        let join_table: Vec<Vec<u32>> = self
            .masks
            .iter()
            .map(|&s| {
                irr_masks
                    .iter()
                    .map(|&h| self.index[&self.join(s, h)] as u32)
                    .collect()
            })
            .collect();
        let trivial = self.index[&1];
        let full = self.index[&self.full_mask()];
        let mut search = Search {
            masks: &self.masks,
            irr: &irr,
            irr_masks: &irr_masks,
            join_table: &join_table,
            full,
            chosen: Vec::new(),
            others: Vec::new(),
            out: Vec::new(),
        };
        search.run(0, trivial, &mut visit);
    }
}

struct Search<'a> {
    masks: &'a [u64],
    irr: &'a [usize],
    irr_masks: &'a [u64],
    join_table: &'a [Vec<u32>],
    full: usize,
    /// Positions in `irr` of the chosen summands.
    chosen: Vec<usize>,
    /// For each chosen summand, the lattice index of the sum of the others.
    others: Vec<usize>,
    out: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, sum: usize, visit: &mut impl FnMut(&[usize])) {
        if sum == self.full {
            self.out.clear();
            self.out.extend(self.chosen.iter().map(|&j| self.irr[j]));
            visit(&self.out);
            return;
        }
        let sum_mask = self.masks[sum];
        for j in start..self.irr.len() {
            // redundancy only grows with the set, so prune as soon as it appears
            if self.irr_masks[j] & !sum_mask == 0 {
                continue;
            }
            let new_others: Vec<usize> = self
                .others
                .iter()
                .map(|&o| self.join_table[o][j] as usize)
                .collect();
            let still_irredundant = self
                .chosen
                .iter()
                .zip(&new_others)
                .all(|(&c, &o)| self.irr_masks[c] & !self.masks[o] != 0);
            if !still_irredundant {
                continue;
            }
            let saved = std::mem::replace(&mut self.others, new_others);
            self.others.push(sum);
            self.chosen.push(j);
            let next = self.join_table[sum][j] as usize;
            self.run(j + 1, next, visit);
            self.chosen.pop();
            self.others = saved;
        }
    }
}

/// Every subgroup of `group`, smallest first.
pub fn all_subgroups(group: &FiniteAbelianGroup) -> Result<Vec<Subgroup>> {
    Ok(SubgroupLattice::new(group)?.subgroups())
}

/// True iff `h` is not the sum of two proper subgroups of itself.
pub fn is_sum_irreducible(group: &FiniteAbelianGroup, h: &Subgroup) -> Result<bool> {
    SubgroupLattice::new(group)?.is_sum_irreducible(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceIndex {
    /// The common size of every irredundant representation.
    pub index: usize,
    /// Distinct sizes seen; a single entry means all representations are equicardinal.
    pub sizes: Vec<usize>,
    pub representation_count: u64,
    /// The first representation in search order.
    pub example: Vec<Subgroup>,
}

impl BruteForceIndex {
    pub fn equicardinal(&self) -> bool {
        self.sizes.len() <= 1
    }
}

/// `ir′(A)` by enumerating all irredundant sums of sum-irreducible subgroups.
pub fn sum_reducibility_index_bruteforce(group: &FiniteAbelianGroup) -> Result<BruteForceIndex> {
    let lattice = SubgroupLattice::new(group)?;
    let mut sizes = BTreeSet::new();
    let mut count = 0u64;
    let mut example = None;
    lattice.for_each_irredundant_representation(|rep| {
        sizes.insert(rep.len());
        count += 1;
        if example.is_none() {
            example = Some(rep.iter().map(|&i| lattice.subgroup(i)).collect());
        }
    });
    let sizes: Vec<usize> = sizes.into_iter().collect();
    Ok(BruteForceIndex {
        index: sizes.first().copied().unwrap_or(0),
        sizes,
        representation_count: count,
        example: example.unwrap_or_default(),
    })
}

/// `ir′(A) = Σ_p rank_p(A)`.
pub fn sum_reducibility_index_formula(group: &FiniteAbelianGroup) -> usize {
    group.primes().iter().map(|&p| group.rank_p(p)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecondaryComponent {
    pub prime: u64,
    pub structure: FiniteAbelianGroup,
    pub subgroup: Subgroup,
    /// Multiplication by `prime^k` kills the component.
    pub nilpotency_exponent: u32,
    pub nilpotent: bool,
    /// Multiplication by every other prime up to `|A|` is onto the component.
    pub surjective_off_prime: bool,
}

/// `A = Σ A_p` with each `A_p` a `pZ`-secondary submodule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecondaryRepresentation {
    pub components: Vec<SecondaryComponent>,
    pub sums_to_group: bool,
}

impl SecondaryRepresentation {
    pub fn is_valid(&self) -> bool {
        self.sums_to_group
            && self
                .components
                .iter()
                .all(|c| c.nilpotent && c.surjective_off_prime)
    }

    pub fn primes(&self) -> BTreeSet<u64> {
        self.components.iter().map(|c| c.prime).collect()
    }
}

/// The primary components, each checked to be secondary by direct computation.
pub fn secondary_representation(group: &FiniteAbelianGroup) -> Result<SecondaryRepresentation> {
    if group.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    group.check_element_cap()?;
    let n = group.order() as usize;
    let order = group.order();
    let other_primes: Vec<u64> = (2..=order)
        .filter(|&q| as_prime_power(q).is_some_and(|(p, k)| p == q && k == 1))
        .collect();
    let mut components = Vec::new();
    for p in group.primes() {
        let structure = group.p_part(p);
        let k = structure
            .orders()
            .iter()
            .map(|&q| as_prime_power(q).expect("primary").1)
            .max()
            .unwrap_or(0);
        let kill = p.pow(k);
        let elements: Vec<usize> = (0..n).filter(|&a| group.scale(kill, a) == 0).collect();
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        let nilpotent = elements.iter().all(|&a| group.scale(kill, a) == 0)
            && set.len() as u64 == structure.order();
        let surjective_off_prime = other_primes.iter().filter(|&&q| q != p).all(|&q| {
            let image: BTreeSet<usize> = elements.iter().map(|&a| group.scale(q, a)).collect();
            image == set
        });
        components.push(SecondaryComponent {
            prime: p,
            structure,
            subgroup: Subgroup { elements },
            nilpotency_exponent: k,
            nilpotent,
            surjective_off_prime,
        });
    }
    let pairwise_trivial = components.iter().enumerate().all(|(i, a)| {
        components[i + 1..].iter().all(|b| {
            a.subgroup
                .elements
                .iter()
                .filter(|e| b.subgroup.contains(**e))
                .count()
                == 1
        })
    });
    let product: u64 = components
        .iter()
        .map(|c| c.subgroup.order() as u64)
        .product();
    Ok(SecondaryRepresentation {
        components,
        sums_to_group: pairwise_trivial && product == order,
    })
}

/// Primes dividing `|A|`.
pub fn attached_primes(group: &FiniteAbelianGroup) -> Result<BTreeSet<u64>> {
    if group.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    Ok(group.primes())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditivityReport {
    /// Brute force on the whole group; `None` above [`LATTICE_CAP`].
    pub bruteforce: Option<usize>,
    pub per_prime: BTreeMap<u64, usize>,
    pub formula: usize,
    pub equicardinal: bool,
    pub passed: bool,
}

/// `ir′(A) = Σ_p ir′(A_p)`, with every side computed by brute force and by the formula.
///
/// Attached primes of a finite group are maximal ideals `pZ`, pairwise incomparable,
/// so no attached prime is embedded. Each primary part must be within [`LATTICE_CAP`];
/// the whole group is brute-forced only when it is too.
pub fn check_additivity(group: &FiniteAbelianGroup) -> Result<AdditivityReport> {
    let whole = if group.order() <= LATTICE_CAP {
        Some(sum_reducibility_index_bruteforce(group)?)
    } else {
        None
    };
    let mut per_prime = BTreeMap::new();
    let mut equicardinal = whole.as_ref().is_none_or(BruteForceIndex::equicardinal);
    for p in group.primes() {
        let part = sum_reducibility_index_bruteforce(&group.p_part(p))?;
        equicardinal &= part.equicardinal();
        per_prime.insert(p, part.index);
    }
    let formula = sum_reducibility_index_formula(group);
    let summed: usize = per_prime.values().sum();
    let bruteforce = whole.map(|w| w.index);
    Ok(AdditivityReport {
        bruteforce,
        passed: equicardinal && bruteforce.is_none_or(|b| b == summed) && summed == formula,
        per_prime,
        formula,
        equicardinal,
    })
}

/// The structure of `A/B`, recovered from the sizes of the `p^j`-torsion of the quotient.
pub fn quotient(group: &FiniteAbelianGroup, b: &Subgroup) -> Result<FiniteAbelianGroup> {
    group.check_element_cap()?;
    let n = group.order() as usize;
    let b_order = b.order() as u64;
    if b_order == 0 || !b.contains(0) {
        return Err(Error::InvalidGroup("not a subgroup".into()));
    }
    let q_order = group.order() / b_order;
    let mut orders = Vec::new();
    for (p, e) in factorize(q_order) {
        // torsion[j] = |Q[p^j]|
        let mut torsion = vec![1u64];
        for j in 1..=e {
            let pj = p.pow(j);
            let count = (0..n).filter(|&a| b.contains(group.scale(pj, a))).count() as u64;
            torsion.push(count / b_order);
        }
        // r[j] = number of cyclic factors of exponent >= j
        let mut r = vec![0u32; e as usize + 2];
        for j in 1..=e as usize {
            let mut ratio = torsion[j] / torsion[j - 1];
            while ratio > 1 {
                ratio /= p;
                r[j] += 1;
            }
        }
        for j in 1..=e as usize {
            for _ in 0..(r[j] - r[j + 1]) {
                orders.push(p.pow(j as u32));
            }
        }
    }
    FiniteAbelianGroup::from_primary(orders)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientMonotonicityReport {
    pub ir_prime: usize,
    pub subgroups_checked: usize,
    pub max_quotient_ir_prime: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// `ir′(A/B) <= ir′(A)` for every subgroup `B`, and sum-irreducibility passes to quotients.
pub fn quotient_monotonicity_check(
    group: &FiniteAbelianGroup,
) -> Result<QuotientMonotonicityReport> {
    if group.order() > QUOTIENT_CAP {
        return Err(Error::TooLarge(format!(
            "group of order {} exceeds the quotient cap {QUOTIENT_CAP}",
            group.order()
        )));
    }
    let ir_prime = sum_reducibility_index_bruteforce(group)?.index;
    let lattice = SubgroupLattice::new(group)?;
    let mut memo: HashMap<FiniteAbelianGroup, usize> = HashMap::new();
    let mut violations = Vec::new();
    let mut max_q = 0;
    let subgroups = lattice.subgroups();
    for b in &subgroups {
        let q = quotient(group, b)?;
        let q_index = match memo.get(&q) {
            Some(&v) => v,
            None => {
                let v = sum_reducibility_index_bruteforce(&q)?.index;
                memo.insert(q.clone(), v);
                v
            }
        };
        max_q = max_q.max(q_index);
        if q_index > ir_prime {
            violations.push(format!(
                "ir'({group} / B) = {q_index} > {ir_prime} for B of order {}",
                b.order()
            ));
        }
        if ir_prime == 1 && q_index > 1 {
            violations.push(format!(
                "quotient {q} of a sum-irreducible group is reducible"
            ));
        }
    }
    Ok(QuotientMonotonicityReport {
        ir_prime,
        subgroups_checked: subgroups.len(),
        max_quotient_ir_prime: max_q,
        passed: violations.is_empty(),
        violations,
    })
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One representative of each isomorphism class of nontrivial groups of order `<= max_order`.
pub fn isomorphism_classes(max_order: u64) -> Vec<FiniteAbelianGroup> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        let mut classes: Vec<Vec<u64>> = vec![Vec::new()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for part in partitions(e, e) {
                for base in &classes {
                    let mut orders = base.clone();
                    orders.extend(part.iter().map(|&k| p.pow(k)));
                    next.push(orders);
                }
            }
            classes = next;
        }
        out.extend(
            classes
                .into_iter()
                .map(|o| FiniteAbelianGroup::from_primary(o).expect("prime powers")),
        );
    }
    out
}

/// `h` is cyclic of prime-power order.
pub fn is_cyclic_prime_power(group: &FiniteAbelianGroup, h: &Subgroup) -> bool {
    let order = h.order() as u64;
    if as_prime_power(order).is_none() {
        return false;
    }
    h.elements().iter().any(|&g| {
        let mut count = 1;
        let mut cur = g;
        while cur != 0 {
            cur = group.add(cur, g);
            count += 1;
        }
        count == order
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_cyclic_orders(orders.iter().copied()).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&g(&[2, 2])).unwrap().len(), 5);
        assert_eq!(all_subgroups(&g(&[4])).unwrap().len(), 3);
        assert_eq!(all_subgroups(&g(&[6])).unwrap().len(), 4);
        // Gaussian binomials: 1 + 63 + 651 + 1395 + 651 + 63 + 1
        assert_eq!(all_subgroups(&g(&[2, 2, 2, 2, 2, 2])).unwrap().len(), 2825);
        assert!(matches!(all_subgroups(&g(&[65])), Err(Error::TooLarge(_))));
    }

    #[test]
    fn sum_irreducible_examples() {
        for (orders, expected) in [(&[4u64][..], true), (&[2, 2], false), (&[6], false)] {
            let grp = g(orders);
            let lattice = SubgroupLattice::new(&grp).unwrap();
            let whole = lattice.subgroup(lattice.len() - 1);
            assert_eq!(
                lattice.is_sum_irreducible(&whole).unwrap(),
                expected,
                "{grp}"
            );
        }
        let lattice = SubgroupLattice::new(&g(&[4])).unwrap();
        assert_eq!(
            lattice.is_sum_irreducible(&lattice.subgroup(0)),
            Err(Error::TrivialGroup)
        );
    }

    #[test]
    fn bruteforce_examples() {
        let r = sum_reducibility_index_bruteforce(&g(&[2, 2])).unwrap();
        assert_eq!((r.index, r.representation_count), (2, 3));
        assert_eq!(
            sum_reducibility_index_bruteforce(&g(&[12])).unwrap().index,
            2
        );
        for q in [2, 4, 8, 3, 9, 27, 5, 25, 7, 49] {
            assert_eq!(
                sum_reducibility_index_bruteforce(&g(&[q])).unwrap().index,
                1
            );
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(sum_reducibility_index_formula(&g(&[2, 2, 3])), 3);
        assert_eq!(sum_reducibility_index_formula(&g(&[8])), 1);
        assert_eq!(sum_reducibility_index_formula(&g(&[4, 9, 3])), 3);
    }

    #[test]
    fn secondary_examples() {
        let rep = secondary_representation(&g(&[12])).unwrap();
        assert!(rep.is_valid());
        let structures: Vec<String> = rep
            .components
            .iter()
            .map(|c| c.structure.to_string())
            .collect();
        assert_eq!(structures, vec!["Z/4", "Z/3"]);
        let rep = secondary_representation(&g(&[8])).unwrap();
        assert_eq!(rep.components.len(), 1);
        assert_eq!(rep.components[0].subgroup.order(), 8);
        assert_eq!(
            secondary_representation(&g(&[2, 3, 5]))
                .unwrap()
                .components
                .len(),
            3
        );
        assert_eq!(
            secondary_representation(&FiniteAbelianGroup::trivial()),
            Err(Error::TrivialGroup)
        );
    }

    #[test]
    fn attached_examples() {
        assert_eq!(attached_primes(&g(&[12])).unwrap(), BTreeSet::from([2, 3]));
        assert_eq!(attached_primes(&g(&[2, 2])).unwrap(), BTreeSet::from([2]));
        assert_eq!(
            attached_primes(&g(&[30])).unwrap(),
            BTreeSet::from([2, 3, 5])
        );
    }

    #[test]
    fn additivity_examples() {
        let r = check_additivity(&g(&[2, 2, 3])).unwrap();
        assert_eq!((r.bruteforce, r.formula), (Some(3), 3));
        assert_eq!(r.per_prime, BTreeMap::from([(2, 2), (3, 1)]));
        assert!(r.passed);
        assert!(check_additivity(&g(&[27])).unwrap().passed);
        let r = check_additivity(&g(&[4, 2, 9])).unwrap();
        assert_eq!((r.bruteforce, r.formula), (None, 3));
        assert_eq!(r.per_prime, BTreeMap::from([(2, 2), (3, 1)]));
        assert!(r.passed);
    }

    #[test]
    fn quotient_structure() {
        // Z/4 + Z/2 modulo the diagonal subgroup {(0,0), (2,1)} is cyclic of order 4
        let grp = g(&[4, 2]);
        let diag = Subgroup {
            elements: vec![0, grp.index(&[2, 1])],
        };
        assert_eq!(quotient(&grp, &diag).unwrap(), g(&[4]));
        let whole = Subgroup {
            elements: (0..8).collect(),
        };
        assert!(quotient(&grp, &whole).unwrap().is_trivial());
    }

    #[test]
    fn monotonicity_examples() {
        let r = quotient_monotonicity_check(&g(&[4, 2])).unwrap();
        assert!(r.passed);
        assert_eq!(r.ir_prime, 2);
        let r = quotient_monotonicity_check(&g(&[8])).unwrap();
        assert_eq!((r.ir_prime, r.max_quotient_ir_prime), (1, 1));
        let r = quotient_monotonicity_check(&g(&[2, 2, 2])).unwrap();
        assert_eq!(r.max_quotient_ir_prime, 3);
        assert!(matches!(
            quotient_monotonicity_check(&g(&[64])),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn class_enumeration() {
        let classes = isomorphism_classes(16);
        let of_order = |n: u64| classes.iter().filter(|c| c.order() == n).count();
        assert_eq!(of_order(8), 3);
        assert_eq!(of_order(16), 5);
        assert_eq!(of_order(12), 2);
        assert_eq!(
            isomorphism_classes(64)
                .iter()
                .filter(|c| c.order() == 64)
                .count(),
            11
        );
    }

    #[test]
    fn display_and_parse_normal_form() {
        assert_eq!(g(&[2, 4, 9, 3]).to_string(), "Z/4 + Z/2 + Z/9 + Z/3");
        assert!(FiniteAbelianGroup::from_primary([6]).is_err());
    }
}
