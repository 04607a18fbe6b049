//! Reducibility index `ir` and sum-reducibility index `ir′` in three computable arenas.
//!
//! * Monomial ideals of `k[x_1, ..., x_n]`: irreducible decomposition, associated primes,
//!   0-th Bass numbers, flat base change and, for finite colength, the Matlis dual
//!   modeled as a staircase.
//! * One-variable hypersurfaces over finite fields, where field extension splits primes.
//! * Finite abelian groups as Artinian `Z`-modules.
//!
//! Each index is computed along at least two independent routes; [`verify`] runs the
//! suites that compare them.

pub mod abelian;
pub mod base_change;
pub mod bass;
pub mod decompose;
pub mod duality;
pub mod error;
pub mod monomial;
pub mod parse;
pub mod univariate;
pub mod verify;

pub use abelian::{FiniteAbelianGroup, Subgroup, SubgroupLattice};
pub use base_change::{BaseChange, BaseChangeKind, BaseChangeReport, FiberEntry, Verdict};
pub use bass::{BassReport, MonomialPrime};
pub use decompose::{Decomposition, IrreducibleComponent, SplitStrategy};
pub use duality::{DownsetSubmodule, Staircase};
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, RingContext};
pub use univariate::{Factorization, FiniteField, PolyRing, UniPoly};
