//! Canonical construction path generation: every cycle permutation graph of
//! a given order is produced exactly once.
//!
//! The search starts from two `n/2`-cycles joined by one edge and repeatedly
//! adds an edge between an eligible pair. An expansion `G -> G + uv` is kept
//! only if `uv` is the canonical edge of `G + uv`, the reducible edge with
//! the lexicographically largest [`EdgeTuple`]; and only one pair per
//! automorphism orbit of `G` is tried.

use alloc::vec::Vec;

use crate::canon::{self, AutGenerators};
use crate::graph::{named, Edge, Graph};
use crate::props;
use crate::twofactor::{self, FactorSet};
use crate::{check_order, Constraints, Result, Split};

/// Ranking of a reducible edge. `x[0..8]` are cheap invariants; the orbit
/// label `(x8, x9)` is filled in only when needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeTuple {
    pub x: [i32; 8],
    pub orbit_label: Option<(u8, u8)>,
}

const STAGES: usize = 8;

/// One invariant of the tuple for edge `e` of `h`.
fn stage(h: &Graph, e: Edge, s: usize) -> i32 {
    let (a, b) = e.ends();
    let v = match s {
        0 => -(h.ball_size(a, b, 2) as i64),
        1 => -(h.count_cycles_through_edge(e, 4) as i64),
        2 => -(h.count_cycles_through_edge(e, 5) as i64),
        3 => h.ball_size(a, b, 3) as i64,
        4 => -(h.count_cycles_through_edge(e, 6) as i64),
        5 => h.degree2_count_near(a, b, 1) as i64,
        6 => -(h.degree2_count_near(a, b, 2) as i64),
        7 => h.ball_size(a, b, 4) as i64,
        _ => unreachable!(),
    };
    v as i32
}

/// The full tuple of `e` in `h`, orbit label included.
pub fn edge_tuple(h: &Graph, e: Edge) -> EdgeTuple {
    let mut x = [0; STAGES];
    for (s, slot) in x.iter_mut().enumerate() {
        *slot = stage(h, e, s);
    }
    EdgeTuple { x, orbit_label: Some(canon::edge_orbit_label(h, e)) }
}

enum Verdict {
    Reject,
    /// `e` is the unique maximum of the cheap invariants.
    Unique,
    /// These other edges share `e`'s cheap invariants.
    Tied(Vec<Edge>),
}

fn compare_cheap(h: &Graph, e: Edge, candidates: &[Edge]) -> Verdict {
    let mut alive: Vec<Edge> = candidates.iter().copied().filter(|&f| f != e).collect();
    for s in 0..STAGES {
        if alive.is_empty() {
            return Verdict::Unique;
        }
        let mine = stage(h, e, s);
        let mut beaten = false;
        alive.retain(|&f| {
            let x = stage(h, f, s);
            beaten |= x > mine;
            x == mine
        });
        if beaten {
            return Verdict::Reject;
        }
    }
    if alive.is_empty() {
        Verdict::Unique
    } else {
        Verdict::Tied(alive)
    }
}

/// Result of testing one expansion.
struct Accepted {
    factors: FactorSet,
    aut: Option<AutGenerators>,
}

/// Tests whether `uv` is the canonical edge of `h = G + uv`, where `fs` is
/// the complete consecutive factor set of `G`.
fn test_expansion(fs: &FactorSet, h: &Graph, e: Edge) -> Option<Accepted> {
    let mut factors = twofactor::retained_factors(fs, h, e);
    let partial = twofactor::reducible_edges(h, &factors);
    debug_assert!(partial.contains(&e));
    if let Verdict::Reject = compare_cheap(h, e, &partial) {
        return None;
    }
    let verdict = if twofactor::prune_new_factor_search(h, e) {
        compare_cheap(h, e, &partial)
    } else {
        let fresh = twofactor::new_consecutive_factors(h, e, &factors);
        if fresh.is_empty() {
            compare_cheap(h, e, &partial)
        } else {
            factors.factors.extend(fresh);
            let all = twofactor::reducible_edges(h, &factors);
            compare_cheap(h, e, &all)
        }
    };
    match verdict {
        Verdict::Reject => None,
        Verdict::Unique => Some(Accepted { factors, aut: None }),
        Verdict::Tied(rivals) => {
            let (cf, gens) = canon::canonical_form_by_degree(h);
            let label = |f: Edge| {
                let (x, y) = (cf.labeling[f.a as usize], cf.labeling[f.b as usize]);
                (x.max(y), x.min(y))
            };
            // orbit labels: the maximum label over each edge orbit
            let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(h.size());
            let edges = h.edges();
            for f in &edges {
                pairs.push((f.a, f.b));
            }
            let orbit = canon::pair_orbits(&gens, &pairs);
            let mut best = alloc::vec![(0u8, 0u8); edges.len()];
            for (i, &f) in edges.iter().enumerate() {
                best[orbit[i]] = best[orbit[i]].max(label(f));
            }
            let of = |f: Edge| best[orbit[edges.binary_search(&f).unwrap()]];
            let mine = of(e);
            if rivals.iter().all(|&f| of(f) <= mine) {
                Some(Accepted { factors, aut: Some(gens) })
            } else {
                None
            }
        }
    }
}

/// Whether adding `uv` to `h - uv` is a canonical expansion. Factor sets are
/// recomputed from scratch, so this is the slow reference form of the test
/// performed during generation.
pub fn is_canonical_expansion(h: &Graph, e: Edge) -> bool {
    let fs = twofactor::consecutive_factors(h);
    let red = twofactor::reducible_edges(h, &fs);
    if !red.contains(&e) {
        return false;
    }
    let mine = edge_tuple(h, e);
    red.iter().all(|&f| edge_tuple(h, f) <= mine)
}

/// Two `n/2`-cycles joined by the spoke `0 -- n/2`, and its factor set.
pub fn initial_graph(n: usize) -> Result<(Graph, FactorSet)> {
    check_order(n)?;
    let g = named::two_cycles_with_spokes(n / 2, &[(0, 0)]);
    Ok((g, FactorSet::single(twofactor::initial_factor(n))))
}

/// Counters reported by a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Cubic graphs emitted.
    pub outputs: u64,
    /// Accepted intermediate and final graphs.
    pub nodes: u64,
}

struct Search<'a, F> {
    n: usize,
    girth: usize,
    non_hamiltonian: bool,
    split: Split,
    /// Only count nodes down to this depth (used to size splits).
    max_depth: Option<usize>,
    split_counter: u64,
    depth_counts: Vec<u64>,
    stats: Stats,
    sink: &'a mut F,
}

impl<F: FnMut(&Graph)> Search<'_, F> {
    fn depth(&self, g: &Graph) -> usize {
        g.size() - (self.n + 1)
    }

    fn expand(&mut self, g: &Graph, fs: &FactorSet, aut: Option<AutGenerators>) {
        let pairs = twofactor::eligible_pairs(g, fs);
        if pairs.is_empty() {
            return;
        }
        let reps: Vec<usize> = if pairs.len() == 1 {
            alloc::vec![0]
        } else {
            let gens = aut.unwrap_or_else(|| canon::canonical_form_by_degree(g).1);
            let orbit = canon::pair_orbits(&gens, &pairs);
            (0..pairs.len()).filter(|&i| orbit[i] == i).collect()
        };
        for i in reps {
            let (u, v) = (pairs[i].0 as usize, pairs[i].1 as usize);
            if self.girth > 3 && g.distance_within(u, v, self.girth - 2).is_some() {
                continue;
            }
            let e = Edge::new(u, v);
            let h = g.with_edge(u, v);
            let Some(acc) = test_expansion(fs, &h, e) else { continue };
            if self.non_hamiltonian && props::is_hamiltonian(&h) {
                continue;
            }
            let depth = self.depth(&h);
            if depth < self.depth_counts.len() {
                self.depth_counts[depth] += 1;
            }
            if self.max_depth.is_some_and(|d| depth >= d) {
                continue;
            }
            if depth == self.split.depth && !self.split.is_trivial() {
                let c = self.split_counter;
                self.split_counter += 1;
                if c % self.split.modulus != self.split.residue {
                    continue;
                }
            }
            self.stats.nodes += 1;
            if h.is_cubic() {
                self.stats.outputs += 1;
                (self.sink)(&h);
            } else {
                self.expand(&h, &acc.factors, acc.aut);
            }
        }
    }
}

/// Generates every cycle permutation graph of order `n` meeting
/// `constraints`, feeding each to `sink`. With a non-trivial `split` only
/// the slice selected by the residue is explored; the slices of one modulus
/// partition the full output.
pub fn generate<F: FnMut(&Graph)>(
    n: usize,
    constraints: Constraints,
    split: Split,
    sink: &mut F,
) -> Result<Stats> {
    let (g, fs) = initial_graph(n)?;
    let mut s = Search {
        n,
        girth: constraints.effective_girth() as usize,
        non_hamiltonian: constraints.non_hamiltonian,
        split,
        max_depth: None,
        split_counter: 0,
        depth_counts: Vec::new(),
        stats: Stats::default(),
        sink,
    };
    // the starting graph is accepted unconditionally; it is non-hamiltonian
    // and has girth n/2
    if n / 2 < s.girth {
        return Ok(s.stats);
    }
    s.stats.nodes += 1;
    s.expand(&g, &fs, None);
    Ok(s.stats)
}

/// Convenience wrapper collecting the output.
pub fn generate_all(n: usize, constraints: Constraints, split: Split) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(n, constraints, split, &mut |g: &Graph| out.push(g.clone()))?;
    Ok(out)
}

/// Number of accepted nodes at each depth below `limit`, where depth counts
/// edges added to the starting graph.
pub fn nodes_per_depth(n: usize, constraints: Constraints, limit: usize) -> Result<Vec<u64>> {
    let (g, fs) = initial_graph(n)?;
    let mut sink = |_: &Graph| {};
    let mut s = Search {
        n,
        girth: constraints.effective_girth() as usize,
        non_hamiltonian: constraints.non_hamiltonian,
        split: Split::NONE,
        max_depth: Some(limit),
        split_counter: 0,
        depth_counts: alloc::vec![0; limit + 1],
        stats: Stats::default(),
        sink: &mut sink,
    };
    if n / 2 >= s.girth {
        s.depth_counts[0] = 1;
        s.expand(&g, &fs, None);
    }
    s.depth_counts.truncate(limit);
    Ok(s.depth_counts)
}

/// Shallowest depth holding at least `4 * modulus` nodes, capped below the
/// depth of the cubic graphs.
pub fn default_split_depth(n: usize, constraints: Constraints, modulus: u64) -> Result<usize> {
    check_order(n)?;
    let last = n / 2 - 2;
    let mut limit = 2;
    loop {
        let counts = nodes_per_depth(n, constraints, limit.min(last + 1))?;
        if let Some(d) = counts.iter().position(|&c| c >= 4 * modulus) {
            return Ok(d);
        }
        if limit > last {
            return Ok(last);
        }
        limit += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use std::collections::BTreeSet;

    fn certs(graphs: &[Graph]) -> BTreeSet<Vec<u8>> {
        graphs.iter().map(canon::certificate).collect()
    }

    #[test]
    fn small_censuses() {
        for (n, expect) in [(6, 1), (8, 2), (10, 4), (12, 10), (14, 28)] {
            let out = generate_all(n, Constraints::default(), Split::NONE).unwrap();
            assert_eq!(out.len(), expect, "order {n}");
            assert_eq!(certs(&out).len(), expect, "duplicates at order {n}");
            assert!(out.iter().all(filter::has_permutation_two_factor));
        }
    }

    #[test]
    fn petersen_is_generated_once() {
        let out = generate_all(10, Constraints::default(), Split::NONE).unwrap();
        let p = canon::certificate(&named::petersen());
        assert_eq!(out.iter().filter(|g| canon::certificate(g) == p).count(), 1);
        let nh = generate_all(10, Constraints::non_hamiltonian(), Split::NONE).unwrap();
        assert_eq!(certs(&nh), BTreeSet::from([p]));
    }

    #[test]
    fn initial_graph_shape() {
        let (g, fs) = initial_graph(10).unwrap();
        assert_eq!(g.size(), 11);
        assert_eq!(g.girth(), Some(5));
        assert_eq!(fs.len(), 1);
        assert_eq!(initial_graph(6).unwrap().0.size(), 7);
        assert!(initial_graph(7).is_err());
        assert!(initial_graph(4).is_err());
    }

    #[test]
    fn edge_tuple_examples() {
        let p = named::petersen();
        let t = edge_tuple(&p, Edge::new(0, 1));
        assert_eq!(t.x[1], 0);
        assert_eq!(t.x[2], -4);
        assert_eq!((t.x[5], t.x[6]), (0, 0));
        let labels: BTreeSet<EdgeTuple> = p.edges().iter().map(|&e| edge_tuple(&p, e)).collect();
        assert_eq!(labels.len(), 1);
    }

    #[test]
    fn canonical_expansion_is_isomorphism_invariant() {
        let mut rng = StdRng::seed_from_u64(71);
        let graphs = generate_all(12, Constraints::default(), Split::NONE).unwrap();
        for g in &graphs {
            for e in g.edges() {
                let mut phi: Vec<u8> = (0..12).collect();
                phi.shuffle(&mut rng);
                let h = g.relabel(&phi);
                let f = Edge::new(phi[e.a as usize] as usize, phi[e.b as usize] as usize);
                assert_eq!(is_canonical_expansion(g, e), is_canonical_expansion(&h, f));
            }
        }
    }

    #[test]
    fn split_slices_partition_the_census() {
        let full = certs(&generate_all(12, Constraints::default(), Split::NONE).unwrap());
        for modulus in [2, 3, 5] {
            let depth = default_split_depth(12, Constraints::default(), modulus).unwrap();
            let mut union = BTreeSet::new();
            let mut total = 0;
            for r in 0..modulus {
                let part = generate_all(12, Constraints::default(), Split::new(r, modulus, depth).unwrap()).unwrap();
                total += part.len();
                union.extend(certs(&part));
            }
            assert_eq!(total, full.len());
            assert_eq!(union, full);
        }
    }
}
