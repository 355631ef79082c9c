//! Permutation 2-factors: two disjoint chordless cycles covering all
//! vertices, with every remaining edge a spoke between them.
//!
//! A factor is stored as its vertex bipartition. In a subcubic graph the
//! cycle edges are forced by the bipartition, so the pair of masks is also
//! the factor's identity.

use alloc::vec::Vec;

use crate::bits::{self, VSet};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoFactor {
    /// `cyc[0]` holds the smallest vertex.
    pub cyc: [VSet; 2],
}

/// How the degree-3 vertices sit on one cycle of a factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Every vertex of the cycle has degree 3.
    Whole,
    /// The degree-3 vertices induce a path with these vertices.
    Path(VSet),
    /// Neither of the above.
    Scattered,
}

impl TwoFactor {
    pub fn new(a: VSet, b: VSet) -> Self {
        if a & 1 != 0 || (b & 1 == 0 && a.trailing_zeros() < b.trailing_zeros()) {
            TwoFactor { cyc: [a, b] }
        } else {
            TwoFactor { cyc: [b, a] }
        }
    }

    /// The factor whose first cycle is `c`.
    pub fn from_cycle(g: &Graph, c: VSet) -> Self {
        TwoFactor::new(c, g.all_vertices() & !c)
    }

    #[inline]
    pub fn side_of(&self, v: usize) -> usize {
        usize::from(!bits::contains(self.cyc[0], v))
    }

    /// Whether `u` and `v` lie on different cycles.
    #[inline]
    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.side_of(u) != self.side_of(v)
    }

    /// Checks that both parts are chordless cycles of `g` of equal length and
    /// that every vertex outside its cycle's edges is matched by a spoke.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let [a, b] = self.cyc;
        a & b == 0
            && a | b == g.all_vertices()
            && bits::len(a) == bits::len(b)
            && is_chordless_cycle(g, a)
            && is_chordless_cycle(g, b)
    }

    /// Vertices of cycle `i` in cyclic order, starting at its smallest vertex.
    pub fn cycle_order(&self, g: &Graph, i: usize) -> Vec<u8> {
        let c = self.cyc[i];
        let mut out = Vec::with_capacity(bits::len(c));
        let Some(start) = bits::first(c) else { return out };
        let (mut prev, mut at) = (usize::MAX, start);
        loop {
            out.push(at as u8);
            let next = bits::iter(g.nbr_mask(at) & c).find(|&w| w != prev && w != at);
            match next {
                Some(w) if w != start && out.len() < bits::len(c) => {
                    prev = at;
                    at = w;
                }
                _ => break,
            }
        }
        out
    }

    /// Edges joining the two cycles.
    pub fn spokes(&self, g: &Graph) -> Vec<Edge> {
        let mut out = Vec::new();
        for v in bits::iter(self.cyc[0]) {
            for w in bits::iter(g.nbr_mask(v) & self.cyc[1]) {
                out.push(Edge::new(v, w));
            }
        }
        out
    }

    pub fn side(&self, g: &Graph, i: usize) -> Side {
        side_state(g, self.cyc[i])
    }
}

/// Whether `c` induces a single cycle in `g` (every member has exactly two
/// neighbours in `c` and `c` is connected).
pub fn is_chordless_cycle(g: &Graph, c: VSet) -> bool {
    if bits::len(c) < 3 {
        return false;
    }
    if bits::iter(c).any(|v| bits::len(g.nbr_mask(v) & c) != 2) {
        return false;
    }
    let mut seen = c & c.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let next = g.neighborhood(frontier) & c & !seen;
        seen |= next;
        frontier = next;
    }
    seen == c
}

fn side_state(g: &Graph, c: VSet) -> Side {
    let d = c & g.cubic_vertices();
    if d == c {
        return Side::Whole;
    }
    if d == 0 {
        return Side::Scattered;
    }
    let inner: usize = bits::iter(d).map(|v| bits::len(g.nbr_mask(v) & d)).sum();
    if bits::len(d) - inner / 2 == 1 {
        Side::Path(d)
    } else {
        Side::Scattered
    }
}

pub fn is_consecutive(g: &Graph, f: &TwoFactor) -> bool {
    (0..2).any(|i| f.side(g, i) != Side::Scattered)
}

/// A list of factors without repetitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorSet {
    pub factors: Vec<TwoFactor>,
}

impl FactorSet {
    pub fn new() -> Self {
        FactorSet::default()
    }

    pub fn single(f: TwoFactor) -> Self {
        FactorSet { factors: alloc::vec![f] }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, f: &TwoFactor) -> bool {
        self.factors.contains(f)
    }

    /// Inserts `f` unless already present; returns whether it was new.
    pub fn insert(&mut self, f: TwoFactor) -> bool {
        if self.contains(&f) {
            false
        } else {
            self.factors.push(f);
            true
        }
    }

    pub fn iter(&self) -> core::slice::Iter<'_, TwoFactor> {
        self.factors.iter()
    }

    /// Canonical ordering, convenient for comparisons in tests.
    pub fn sorted(mut self) -> Self {
        self.factors.sort_unstable();
        self
    }
}

/// The two cycles `0..k` and `k..2k` with the single spoke `0 -- k`.
pub fn initial_factor(n: usize) -> TwoFactor {
    let k = n / 2;
    TwoFactor::new(bits::full(k), bits::full(n) & !bits::full(k))
}

/// Eligible pairs `(s, t)`: `s` is a degree-2 vertex next to the degree-3
/// path on one cycle of a factor, `t` any degree-2 vertex on the other cycle.
/// Pairs are unordered and reported in first-encounter order.
pub fn eligible_pairs(g: &Graph, fs: &FactorSet) -> Vec<(u8, u8)> {
    let n = g.order();
    let deg2 = g.vertices_of_degree(2);
    let mut seen = alloc::vec![0 as VSet; n];
    let mut out = Vec::new();
    for f in fs.iter() {
        for i in 0..2 {
            let Side::Path(d) = f.side(g, i) else { continue };
            let s_set = g.neighborhood(d) & f.cyc[i] & !d;
            let t_set = f.cyc[1 - i] & deg2;
            for s in bits::iter(s_set) {
                for t in bits::iter(t_set) {
                    let (a, b) = if s < t { (s, t) } else { (t, s) };
                    if !bits::contains(seen[a], b) {
                        seen[a] |= bits::bit(b);
                        out.push((s as u8, t as u8));
                    }
                }
            }
        }
    }
    out
}

/// Edges `e` of `h` such that `h - e` has a consecutive factor in which `e`
/// is an eligible pair: the spokes at both ends of the degree-3 path on a
/// consecutive side, or every spoke when that side is a whole cycle. `fs`
/// must hold every consecutive factor of `h`.
pub fn reducible_edges(h: &Graph, fs: &FactorSet) -> Vec<Edge> {
    let mut out: Vec<Edge> = Vec::new();
    let mut push = |e: Edge| {
        if !out.contains(&e) {
            out.push(e);
        }
    };
    for f in fs.iter() {
        for i in 0..2 {
            match f.side(h, i) {
                Side::Whole => {
                    for e in f.spokes(h) {
                        push(e);
                    }
                }
                Side::Path(d) if bits::len(d) >= 2 => {
                    for x in bits::iter(d) {
                        if bits::len(h.nbr_mask(x) & d) == 1 {
                            let y = bits::first(h.nbr_mask(x) & f.cyc[1 - i]).unwrap();
                            push(Edge::new(x, y));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Enumerates induced cycles of length `k` that contain `prefix` as a
/// subpath (traversed from `prefix[0]` towards its end), avoid `exclude`,
/// and whose complement is an induced cycle as well.
struct CycleSearch<'a> {
    g: &'a Graph,
    k: usize,
    first: usize,
    exclude: VSet,
    out: Vec<TwoFactor>,
}

impl CycleSearch<'_> {
    /// `z` becomes the spoke partner of the path vertex `x`.
    fn spoke_ok(&self, z: usize, cyc: VSet) -> bool {
        self.g.degree(z) == 3 && !bits::contains(cyc, z) && bits::len(self.g.nbr_mask(z) & cyc) == 1
    }

    fn extend(&mut self, end: usize, prev: usize, len: usize, cyc: VSet, spokes: VSet) {
        let g = self.g;
        if len == self.k {
            self.close(end, cyc);
            return;
        }
        let others = g.nbr_mask(end) & !bits::bit(prev);
        for y in bits::iter(others) {
            if bits::contains(cyc | spokes | self.exclude, y) {
                continue;
            }
            let next_cyc = cyc | bits::bit(y);
            let rest = others & !bits::bit(y);
            if let Some(z) = bits::first(rest) {
                if !self.spoke_ok(z, next_cyc) {
                    continue;
                }
            }
            let next_spokes = spokes | rest;
            // y may touch the path only at `end`, and may not touch a vertex
            // already committed to the other cycle
            let mut touch = bits::bit(end);
            if len + 1 == self.k {
                touch |= bits::bit(self.first);
            }
            if g.nbr_mask(y) & cyc & !touch != 0 || g.nbr_mask(y) & next_spokes != 0 {
                continue;
            }
            self.extend(y, end, len + 1, next_cyc, next_spokes);
        }
    }

    fn close(&mut self, end: usize, cyc: VSet) {
        let g = self.g;
        if !g.has_edge(end, self.first) || !is_chordless_cycle(g, cyc) {
            return;
        }
        let rest = g.all_vertices() & !cyc;
        if bits::len(rest) == self.k && is_chordless_cycle(g, rest) {
            self.out.push(TwoFactor::new(cyc, rest));
        }
    }
}

/// Factors with a cycle containing `prefix` as a directed subpath, none of
/// whose cycle vertices lie in `exclude`.
fn search_prefix(g: &Graph, prefix: &[usize], exclude: VSet) -> Vec<TwoFactor> {
    let n = g.order();
    let k = n / 2;
    let mut s = CycleSearch {
        g,
        k,
        first: prefix[0],
        exclude,
        out: Vec::new(),
    };
    if n % 2 != 0 || k < 3 || prefix.len() < 2 || prefix.len() > k {
        return s.out;
    }
    let mut cyc: VSet = 0;
    for &p in prefix {
        if bits::contains(cyc | exclude, p) {
            return s.out;
        }
        cyc |= bits::bit(p);
    }
    for w in prefix.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return s.out;
        }
    }
    let mut spokes: VSet = 0;
    for (idx, &p) in prefix.iter().enumerate() {
        let mut allowed = 0;
        if idx > 0 {
            allowed |= bits::bit(prefix[idx - 1]);
        }
        if idx + 1 < prefix.len() {
            allowed |= bits::bit(prefix[idx + 1]);
        }
        if idx == 0 || idx + 1 == prefix.len() {
            // end vertices: their remaining neighbours are decided later,
            // but they must not create chords within the prefix
            if idx == 0 && prefix.len() == k {
                allowed |= bits::bit(prefix[prefix.len() - 1]);
            }
            if idx + 1 == prefix.len() && prefix.len() == k {
                allowed |= bits::bit(prefix[0]);
            }
            if g.nbr_mask(p) & cyc & !allowed != 0 {
                return s.out;
            }
            continue;
        }
        if g.nbr_mask(p) & cyc != allowed {
            return s.out;
        }
        spokes |= g.nbr_mask(p) & !cyc;
    }
    for z in bits::iter(spokes) {
        if !s.spoke_ok(z, cyc) {
            return s.out;
        }
    }
    let end = prefix[prefix.len() - 1];
    let prev = prefix[prefix.len() - 2];
    s.extend(end, prev, prefix.len(), cyc, spokes);
    s.out
}

/// Every permutation 2-factor of `g`.
pub fn permutation_factors(g: &Graph) -> Vec<TwoFactor> {
    let mut out = Vec::new();
    if g.order() == 0 {
        return out;
    }
    let nb = g.neighbors(0);
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            let (a, b) = (nb[i] as usize, nb[j] as usize);
            out.extend(search_prefix(g, &[a, 0, b], 0));
        }
    }
    out
}

/// Every consecutive permutation 2-factor of `g`.
pub fn consecutive_factors(g: &Graph) -> FactorSet {
    let mut fs = FactorSet::new();
    for f in permutation_factors(g) {
        if is_consecutive(g, &f) {
            fs.insert(f);
        }
    }
    fs
}

/// Consecutive permutation 2-factors of `g` in which `e` is a spoke.
pub fn find_consecutive_containing(g: &Graph, e: Edge) -> Vec<TwoFactor> {
    let (u, v) = e.ends();
    consecutive_factors(g)
        .factors
        .into_iter()
        .filter(|f| f.separates(u, v))
        .collect()
}

/// Pruning test on `h = G + uv`: at least two degree-2 vertices among
/// the neighbours of `u` and `v` in `h` means `h` has no consecutive factor
/// that `G` lacked.
pub fn prune_new_factor_search(h: &Graph, e: Edge) -> bool {
    let (u, v) = e.ends();
    let near = h.nbr_mask(u) | h.nbr_mask(v);
    bits::len(near & h.vertices_of_degree(2)) >= 2
}

/// Factors of `fs` (complete for `G`) that are still consecutive
/// permutation 2-factors of `h = G + uv`.
pub fn retained_factors(fs: &FactorSet, h: &Graph, e: Edge) -> FactorSet {
    let (u, v) = e.ends();
    FactorSet {
        factors: fs
            .iter()
            .filter(|f| f.separates(u, v) && is_consecutive(h, f))
            .copied()
            .collect(),
    }
}

/// Consecutive factors of `h = G + uv` that are missing from `known`, where
/// `known` holds the retained factors of `G`. When `h` is cubic every factor
/// is consecutive and they are enumerated directly. Otherwise a new factor
/// either has `uv` on a cycle, or has `uv` as a spoke whose endpoint `x` lies
/// inside the degree-3 path so that both cycle neighbours of `x` have
/// degree 3.
pub fn new_consecutive_factors(h: &Graph, e: Edge, known: &FactorSet) -> Vec<TwoFactor> {
    let mut found: Vec<TwoFactor> = Vec::new();
    let keep = |f: TwoFactor, found: &mut Vec<TwoFactor>| {
        if !known.contains(&f) && !found.contains(&f) && is_consecutive(h, &f) {
            found.push(f);
        }
    };
    if h.is_cubic() {
        for f in permutation_factors(h) {
            keep(f, &mut found);
        }
        return found;
    }
    let (u, v) = e.ends();
    for f in search_prefix(h, &[u, v], 0) {
        keep(f, &mut found);
    }
    for (x, y) in [(u, v), (v, u)] {
        let nb: Vec<usize> = h
            .neighbors(x)
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| w != y)
            .collect();
        if nb.len() == 2 && nb.iter().all(|&w| h.degree(w) == 3) {
            for f in search_prefix(h, &[nb[0], x, nb[1]], bits::bit(y)) {
                keep(f, &mut found);
            }
        }
    }
    found
}

/// Complete consecutive factor set of `G + e` from the complete set of `G`.
pub fn update_after_add(fs: &FactorSet, g: &Graph, e: Edge) -> FactorSet {
    let (u, v) = e.ends();
    let h = g.with_edge(u, v);
    let mut out = retained_factors(fs, &h, e);
    if !prune_new_factor_search(&h, e) {
        for f in new_consecutive_factors(&h, e, &out) {
            out.factors.push(f);
        }
    }
    out
}
