//! Irredundant irreducible decomposition of monomial ideals by splitting.
//!
//! An irreducible monomial ideal is generated by pure powers, `m^a = (x_i^{a_i} : a_i > 0)`.
//! Splitting a generator `x^a = x_i^{a_i} * w` with `gcd(x_i^{a_i}, w) = 1` gives
//! `I = (I + x_i^{a_i}) ∩ (I + w)`; recursing until all generators are pure powers
//! yields a decomposition, and pruning redundant components makes it the unique
//! irredundant one.

use std::collections::{BTreeSet, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingContext};

/// The irreducible ideal `m^a`; `a_i = 0` means `x_i` does not occur.
///
/// The all-zero vector stands for the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IrreducibleComponent {
    bounds: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(bounds: Vec<u32>) -> Self {
        IrreducibleComponent { bounds }
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Support of the component; this is the support of its radical.
    pub fn support(&self) -> Vec<usize> {
        (0..self.bounds.len())
            .filter(|&i| self.bounds[i] > 0)
            .collect()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.bounds.iter().all(|&a| a == 0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.bounds
            .iter()
            .zip(u.exponents())
            .any(|(&a, &e)| a >= 1 && e >= a)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.bounds.len();
        let gens = self
            .bounds
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| Monomial::pure_power(n, i, a))
            .collect();
        MonomialIdeal::from_generators_unchecked(n, gens)
    }

    pub fn display(&self, ctx: &RingContext) -> String {
        if self.is_zero_ideal() {
            return "(0)".to_string();
        }
        ctx.fmt_ideal(&self.to_ideal())
    }
}

/// True iff every generator of `ideal` lies in `m^c`, i.e. `ideal ⊆ m^c`.
pub fn component_contains(c: &IrreducibleComponent, ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|g| c.contains(g))
}

/// How the splitting variable is chosen inside the first mixed generator.
///
/// The result after pruning does not depend on this choice; it is exposed so the
/// uniqueness of the irredundant decomposition can be tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitStrategy {
    FirstVariable,
    LastVariable,
    Seeded(u64),
}

impl SplitStrategy {
    fn pick(self, generator: &Monomial, support: &[usize]) -> usize {
        match self {
            SplitStrategy::FirstVariable => support[0],
            SplitStrategy::LastVariable => support[support.len() - 1],
            SplitStrategy::Seeded(seed) => {
                let mut hasher = DefaultHasher::new();
                generator.hash(&mut hasher);
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ hasher.finish());
                support[rng.gen_range(0..support.len())]
            }
        }
    }
}

/// All components produced by the splitting recursion (duplicate-free, possibly redundant).
pub fn split_decompose(
    ideal: &MonomialIdeal,
    strategy: SplitStrategy,
) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut memo = HashMap::new();
    let out = split_rec(ideal, strategy, &mut memo);
    Ok(out.into_iter().collect())
}

fn split_rec(
    ideal: &MonomialIdeal,
    strategy: SplitStrategy,
    memo: &mut HashMap<MonomialIdeal, BTreeSet<IrreducibleComponent>>,
) -> BTreeSet<IrreducibleComponent> {
    if let Some(done) = memo.get(ideal) {
        return done.clone();
    }
    let n = ideal.var_count();
    let mixed = ideal.generators().iter().find(|g| g.support().len() >= 2);
    let result = match mixed {
        None => {
            let mut bounds = vec![0; n];
            for g in ideal.generators() {
                let i = g.pure_power_var().expect("pure power generator");
                bounds[i] = g.exponent(i);
            }
            BTreeSet::from([IrreducibleComponent::new(bounds)])
        }
        Some(g) => {
            let support = g.support();
            let i = strategy.pick(g, &support);
            let power = Monomial::pure_power(n, i, g.exponent(i));
            let rest = g.quotient_by_gcd(&power);
            let mut left = split_rec(&ideal.add_generator(power), strategy, memo);
            let right = split_rec(&ideal.add_generator(rest), strategy, memo);
            left.extend(right);
            left
        }
    };
    memo.insert(ideal.clone(), result.clone());
    result
}

fn intersect_all<'a>(
    nvars: usize,
    components: impl IntoIterator<Item = &'a IrreducibleComponent>,
) -> MonomialIdeal {
    components
        .into_iter()
        .fold(MonomialIdeal::unit(nvars), |acc, c| {
            acc.intersect(&c.to_ideal())
        })
}

/// An irredundant irreducible decomposition of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    components: Vec<IrreducibleComponent>,
    source: MonomialIdeal,
}

impl Decomposition {
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    /// The reducibility index: number of components.
    pub fn ir(&self) -> usize {
        self.components.len()
    }

    /// The source is the zero ideal, so the quotient is the polynomial ring itself.
    pub fn is_domain_case(&self) -> bool {
        self.source.is_zero()
    }

    /// Number of components whose radical has the given support.
    pub fn count_with_support(&self, support: &[usize]) -> usize {
        self.components
            .iter()
            .filter(|c| c.support() == support)
            .count()
    }
}

/// Prunes `candidates` to the irredundant decomposition of `ideal`.
pub fn irredundant(
    candidates: &[IrreducibleComponent],
    ideal: &MonomialIdeal,
) -> Result<Decomposition> {
    let n = ideal.var_count();
    if candidates.iter().any(|c| c.bounds().len() != n) {
        return Err(Error::InvalidCandidates);
    }
    if intersect_all(n, candidates) != *ideal {
        return Err(Error::InvalidCandidates);
    }
    let mut current: Vec<IrreducibleComponent> = candidates
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    'prune: loop {
        for k in 0..current.len() {
            let others = intersect_all(
                n,
                current
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, c)| c),
            );
            if component_contains(&current[k], &others) {
                current.remove(k);
                continue 'prune;
            }
        }
        break;
    }
    Ok(Decomposition {
        components: current,
        source: ideal.clone(),
    })
}

/// Irredundant decomposition using the default splitting strategy.
pub fn decompose(ideal: &MonomialIdeal) -> Result<Decomposition> {
    decompose_with(ideal, SplitStrategy::FirstVariable)
}

pub fn decompose_with(ideal: &MonomialIdeal, strategy: SplitStrategy) -> Result<Decomposition> {
    let candidates = split_decompose(ideal, strategy)?;
    irredundant(&candidates, ideal)
}

/// `ir(R/I)` as the size of the irredundant decomposition.
///
/// The zero ideal counts as one component: `R` is a domain, so `(0)` is irreducible.
pub fn reducibility_index_by_decomposition(ideal: &MonomialIdeal) -> Result<usize> {
    decompose(ideal).map(|d| d.ir())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens[0].len(), gens).unwrap()
    }

    fn comp(b: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(b.to_vec())
    }

    #[test]
    fn split_examples() {
        let i = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let d = decompose(&i).unwrap();
        assert_eq!(d.components(), &[comp(&[1, 3]), comp(&[2, 1])]);

        let single = ideal(&[&[3, 0]]);
        assert_eq!(
            split_decompose(&single, SplitStrategy::FirstVariable).unwrap(),
            vec![comp(&[3, 0])]
        );

        let d = decompose(&ideal(&[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(d.components(), &[comp(&[1, 0]), comp(&[2, 1])]);
    }

    #[test]
    fn unit_ideal_rejected() {
        assert_eq!(
            split_decompose(&MonomialIdeal::unit(2), SplitStrategy::FirstVariable),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn irredundant_examples() {
        let i = ideal(&[&[2, 0], &[1, 1]]);
        // (x^3, y^2) does not contain x^2, so these candidates intersect below I
        assert_eq!(
            irredundant(&[comp(&[1, 0]), comp(&[2, 1]), comp(&[3, 2])], &i),
            Err(Error::InvalidCandidates)
        );
        let d = irredundant(&[comp(&[1, 2]), comp(&[1, 0]), comp(&[2, 1])], &i).unwrap();
        assert_eq!(d.components(), &[comp(&[1, 0]), comp(&[2, 1])]);

        let x = ideal(&[&[1, 0]]);
        assert_eq!(irredundant(&[comp(&[1, 0])], &x).unwrap().ir(), 1);
        assert_eq!(
            irredundant(&[comp(&[1, 0]), comp(&[1, 0])], &x)
                .unwrap()
                .ir(),
            1
        );
        assert_eq!(
            irredundant(&[comp(&[2, 0])], &x),
            Err(Error::InvalidCandidates)
        );
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            reducibility_index_by_decomposition(&ideal(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap(),
            2
        );
        assert_eq!(
            reducibility_index_by_decomposition(&ideal(&[&[1, 0]])).unwrap(),
            1
        );
        assert_eq!(
            reducibility_index_by_decomposition(&ideal(&[&[2, 0], &[1, 1]])).unwrap(),
            2
        );
    }

    #[test]
    fn zero_ideal_is_domain_case() {
        let d = decompose(&MonomialIdeal::zero(3)).unwrap();
        assert_eq!(d.ir(), 1);
        assert!(d.is_domain_case());
        assert!(d.components()[0].is_zero_ideal());
    }

    #[test]
    fn component_contains_examples() {
        assert!(component_contains(
            &comp(&[1, 3]),
            &ideal(&[&[2, 0], &[1, 1], &[0, 3]])
        ));
        assert!(!component_contains(&comp(&[2, 0]), &ideal(&[&[1, 0]])));
        assert!(component_contains(
            &comp(&[1, 0]),
            &ideal(&[&[2, 0], &[1, 1]])
        ));
    }
}
