//! Recognition of cycle permutation graphs through their perfect matchings:
//! a cubic graph is one exactly when the complement of some perfect matching
//! is two cycles and every matching edge joins them.

use alloc::vec::Vec;

use crate::bits::{self, VSet};
use crate::graph::{Edge, Graph};
use crate::twofactor::TwoFactor;

/// Calls `f` once for every perfect matching of `g`, branching on the
/// smallest unmatched vertex. Stops early when `f` returns `false`.
pub fn for_each_perfect_matching(g: &Graph, mut f: impl FnMut(&[Edge]) -> bool) {
    let mut stack = Vec::with_capacity(g.order() / 2);
    if g.order() % 2 == 0 {
        matchings(g, g.all_vertices(), &mut stack, &mut f);
    }
}

fn matchings(g: &Graph, free: VSet, stack: &mut Vec<Edge>, f: &mut impl FnMut(&[Edge]) -> bool) -> bool {
    let Some(v) = bits::first(free) else { return f(stack) };
    let rest = free & !bits::bit(v);
    for w in bits::iter(g.nbr_mask(v) & rest) {
        stack.push(Edge::new(v, w));
        let go_on = matchings(g, rest & !bits::bit(w), stack, f);
        stack.pop();
        if !go_on {
            return false;
        }
    }
    true
}

pub fn perfect_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// The permutation 2-factor whose spokes are `matching`, if there is one.
fn factor_of_matching(g: &Graph, matching: &[Edge]) -> Option<TwoFactor> {
    let n = g.order();
    let mut partner = alloc::vec![0u8; n];
    for e in matching {
        partner[e.a as usize] = e.b;
        partner[e.b as usize] = e.a;
    }
    let cycle_nbrs = |v: usize| g.nbr_mask(v) & !bits::bit(partner[v] as usize);
    // trace the complement component through vertex 0
    let mut c1: VSet = bits::bit(0);
    let mut frontier = c1;
    while frontier != 0 {
        let mut next = 0;
        for v in bits::iter(frontier) {
            next |= cycle_nbrs(v);
        }
        next &= !c1;
        c1 |= next;
        frontier = next;
    }
    let c2 = g.all_vertices() & !c1;
    let Some(start) = bits::first(c2) else { return None };
    let mut seen = bits::bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits::iter(frontier) {
            next |= cycle_nbrs(v);
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    if seen != c2 {
        return None;
    }
    // every matching edge must cross, otherwise it is a chord
    if matching.iter().any(|e| bits::contains(c1, e.a as usize) == bits::contains(c1, e.b as usize)) {
        return None;
    }
    Some(TwoFactor::new(c1, c2))
}

/// All permutation 2-factors of the cubic graph `g`.
pub fn permutation_two_factors(g: &Graph) -> Vec<TwoFactor> {
    let mut out = Vec::new();
    if !g.is_cubic() || g.order() < 6 {
        return out;
    }
    for_each_perfect_matching(g, |m| {
        if let Some(f) = factor_of_matching(g, m) {
            out.push(f);
        }
        true
    });
    out
}

/// Whether the cubic graph `g` is a cycle permutation graph.
pub fn has_permutation_two_factor(g: &Graph) -> bool {
    if !g.is_cubic() || g.order() < 6 {
        return false;
    }
    let mut found = false;
    for_each_perfect_matching(g, |m| {
        found = factor_of_matching(g, m).is_some();
        !found
    });
    found
}
