//! Reference generator by isomorphism lists.
//!
//! Starting from the two cycles with their single spoke, every level adds
//! one edge between an eligible pair in every possible way and keeps one
//! graph per certificate. Slow and memory hungry, but it shares nothing
//! with the canonicity machinery of the fast generators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::canon;
use crate::ccpm;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::props;
use crate::twofactor;
use crate::Constraints;

/// Largest order accepted by [`generate_by_lists`].
pub const DEFAULT_LIMIT: usize = 18;

/// All cycle permutation graphs of order `n` meeting `constraints`, one per
/// isomorphism class, ordered by certificate.
pub fn generate_by_lists(n: usize, constraints: Constraints) -> Result<Vec<Graph>> {
    generate_by_lists_with_limit(n, constraints, DEFAULT_LIMIT)
}

pub fn generate_by_lists_with_limit(n: usize, constraints: Constraints, limit: usize) -> Result<Vec<Graph>> {
    if n > limit {
        return Err(Error::MemoryGuard { order: n, limit });
    }
    let (start, _) = ccpm::initial_graph(n)?;
    let girth = constraints.effective_girth() as usize;
    if girth > n / 2 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    level.insert(canon::certificate(&start), start);
    while level.values().next().is_some_and(|g| !g.is_cubic()) {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for g in level.values() {
            let fs = twofactor::consecutive_factors(g);
            for (u, v) in twofactor::eligible_pairs(g, &fs) {
                let (u, v) = (u as usize, v as usize);
                if girth > 3 && g.distance_within(u, v, girth - 2).is_some() {
                    continue;
                }
                let h = g.with_edge(u, v);
                if constraints.non_hamiltonian && props::is_hamiltonian(&h) {
                    continue;
                }
                next.entry(canon::certificate(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter;
    use std::collections::BTreeSet;

    #[test]
    fn table_rows() {
        assert_eq!(generate_by_lists(10, Constraints::default()).unwrap().len(), 4);
        assert_eq!(generate_by_lists(14, Constraints::default()).unwrap().len(), 28);
        assert_eq!(generate_by_lists(16, Constraints::girth(5)).unwrap().len(), 11);
        assert_eq!(generate_by_lists(10, Constraints::non_hamiltonian()).unwrap().len(), 1);
    }

    #[test]
    fn outputs_are_cycle_permutation_graphs() {
        for g in generate_by_lists(12, Constraints::default()).unwrap() {
            assert!(g.is_cubic());
            assert!(filter::has_permutation_two_factor(&g));
        }
    }

    #[test]
    fn memory_guard() {
        assert_eq!(
            generate_by_lists(20, Constraints::default()),
            Err(Error::MemoryGuard { order: 20, limit: 18 })
        );
        assert!(generate_by_lists_with_limit(8, Constraints::default(), 6).is_err());
        assert_eq!(generate_by_lists_with_limit(8, Constraints::default(), 8).unwrap().len(), 2);
    }

    #[test]
    fn agrees_with_the_fast_generators() {
        let modes = [
            Constraints::default(),
            Constraints::girth(5),
            Constraints::girth(6),
            Constraints::non_hamiltonian(),
        ];
        for n in [6, 8, 10, 12, 14, 16] {
            for c in modes {
                let certs = |gs: Vec<Graph>| gs.iter().map(canon::certificate).collect::<BTreeSet<_>>();
                let oracle = certs(generate_by_lists(n, c).unwrap());
                let fast = ccpm::generate_all(n, c, crate::Split::NONE).unwrap();
                assert_eq!(fast.len(), oracle.len(), "order {n} {c:?}");
                assert_eq!(certs(fast), oracle, "order {n} {c:?}");
                let orderly = crate::orderly::generate_all(
                    n,
                    crate::orderly::Options { constraints: c, ..Default::default() },
                )
                .unwrap();
                assert_eq!(certs(orderly), oracle, "order {n} {c:?}");
            }
        }
    }
}
