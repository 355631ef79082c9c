//! Exhaustive, isomorph-free generation of cycle permutation graphs.
//!
//! A cycle permutation graph is a cubic graph with a 2-factor made of two
//! chordless cycles. This crate holds the algorithmic core and only needs
//! `alloc`:
//!
//! * [`ccpm`] generates every cycle permutation graph of a given order exactly
//!   once (canonical construction path).
//! * [`orderly`] is the faster weak orderly generator over partial
//!   permutations, which may emit a graph more than once.
//! * [`oracle`] is the slow isomorphism-by-lists reference generator.
//! * [`canon`], [`twofactor`], [`props`], [`filter`] and [`klee`] provide the
//!   supporting machinery: canonical labelling, 2-factor bookkeeping, graph
//!   property deciders, the perfect-matching filter and the construction of
//!   non-hamiltonian members from bad permutations.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod canon;
pub mod ccpm;
pub mod error;
pub mod filter;
pub mod graph;
pub mod graph6;
pub mod klee;
pub mod oracle;
pub mod orderly;
pub mod props;
pub mod twofactor;

mod unionfind;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};

/// Constraints shared by all generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Reject graphs containing a cycle shorter than this (0 disables).
    pub min_girth: u32,
    /// Only produce non-hamiltonian graphs.
    pub non_hamiltonian: bool,
}

impl Constraints {
    pub fn girth(g: u32) -> Self {
        Constraints { min_girth: g, non_hamiltonian: false }
    }

    pub fn non_hamiltonian() -> Self {
        Constraints { min_girth: 0, non_hamiltonian: true }
    }

    /// Girth bound actually applied during search. A cycle permutation graph
    /// of order > 6 containing a 4-cycle is hamiltonian, so non-hamiltonian
    /// searches may prune at girth 5.
    pub fn effective_girth(&self) -> u32 {
        if self.non_hamiltonian {
            self.min_girth.max(5)
        } else {
            self.min_girth
        }
    }
}

/// Deterministic partition of a search tree into `modulus` disjoint slices.
///
/// Nodes at depth `depth` are numbered in visiting order; slice `residue`
/// keeps the nodes whose number is congruent to `residue`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub residue: u64,
    pub modulus: u64,
    pub depth: usize,
}

impl Split {
    pub const NONE: Split = Split { residue: 0, modulus: 1, depth: 0 };

    pub fn new(residue: u64, modulus: u64, depth: usize) -> Result<Self> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidSplit { residue, modulus });
        }
        Ok(Split { residue, modulus, depth })
    }

    pub fn is_trivial(&self) -> bool {
        self.modulus == 1
    }
}

impl Default for Split {
    fn default() -> Self {
        Split::NONE
    }
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n % 2 != 0 || n < 6 {
        return Err(Error::InvalidOrder(n));
    }
    if n > graph::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(())
}
