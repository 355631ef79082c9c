//! Weak orderly generation over partial permutations.
//!
//! A graph with cycles `v_0..v_{k-1}` (vertices `0..k`) and `w_0..w_{k-1}`
//! (vertices `k..2k`) carrying the spokes `v_i w_{img[i]}` for `i < l` is
//! encoded by the partial permutation `img`. An encoding is canonical when it
//! is the lexicographically smallest member of its family under the
//! relabelling operations `p1..p4`. Canonical encodings are closed under
//! taking prefixes, so the search only extends canonical prefixes. A graph
//! with several inequivalent permutation 2-factors is emitted once per
//! factor class.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits;
use crate::ccpm::Stats;
use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::props;
use crate::{check_order, Constraints, Split};

/// A partial `k`-permutation with `img[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPermutation {
    k: usize,
    img: Vec<u8>,
}

const MAX_K: usize = 64;

fn sub_mod(a: usize, b: usize, k: usize) -> u8 {
    ((a + k - b) % k) as u8
}

impl PartialPermutation {
    pub fn new(k: usize, img: &[usize]) -> Result<Self> {
        if k == 0 || k > 64 {
            return Err(Error::InvalidPermutation("k must lie in 1..=64"));
        }
        if img.is_empty() || img[0] != 0 || img.len() > k {
            return Err(Error::InvalidPermutation("image must start with 0 and fit in k"));
        }
        let mut used = 0u128;
        for &x in img {
            if x >= k || bits::contains(used, x) {
                return Err(Error::InvalidPermutation("image must be distinct values below k"));
            }
            used |= bits::bit(x);
        }
        Ok(PartialPermutation { k, img: img.iter().map(|&x| x as u8).collect() })
    }

    /// The size-1 permutation `0 -> 0`.
    pub fn root(k: usize) -> Self {
        PartialPermutation { k, img: alloc::vec![0] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn image(&self) -> &[u8] {
        &self.img
    }

    pub fn is_full(&self) -> bool {
        self.img.len() == self.k
    }

    /// Whether the image is exactly `{0, .., l-1}`.
    pub fn is_restricted(&self) -> bool {
        self.img.iter().all(|&x| (x as usize) < self.img.len())
    }

    pub fn used(&self) -> u128 {
        self.img.iter().fold(0, |s, &x| s | bits::bit(x as usize))
    }

    pub fn extended(&self, x: usize) -> Self {
        debug_assert!(!bits::contains(self.used(), x) && !self.is_full());
        let mut img = self.img.clone();
        img.push(x as u8);
        PartialPermutation { k: self.k, img }
    }

    /// Reverses the orientation of the second cycle.
    pub fn p1(&self) -> Self {
        let k = self.k;
        PartialPermutation { k, img: self.img.iter().map(|&x| sub_mod(k, x as usize, k)).collect() }
    }

    /// Reverses the spoked segment of the first cycle and rotates the second
    /// so that the new first spoke lands on `w_0`.
    pub fn p2(&self) -> Self {
        let (k, l) = (self.k, self.img.len());
        let last = self.img[l - 1] as usize;
        PartialPermutation {
            k,
            img: (0..l).map(|i| sub_mod(self.img[l - 1 - i] as usize, last, k)).collect(),
        }
    }

    /// Exchanges the two cycles; defined for restricted permutations only.
    pub fn p3(&self) -> Self {
        assert!(self.is_restricted(), "p3 needs a restricted permutation");
        let mut inv = alloc::vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        PartialPermutation { k: self.k, img: inv }
    }

    /// Rotates the first cycle by one step; defined for full permutations.
    pub fn p4(&self) -> Self {
        assert!(self.is_full(), "p4 needs a full permutation");
        let k = self.k;
        let last = self.img[k - 1] as usize;
        PartialPermutation {
            k,
            img: (0..k)
                .map(|i| {
                    let prev = if i == 0 { last } else { self.img[i - 1] as usize };
                    sub_mod(prev, last, k)
                })
                .collect(),
        }
    }

    /// The encoded graph on `2k` vertices.
    pub fn graph(&self) -> Graph {
        let spokes: Vec<(usize, usize)> =
            self.img.iter().enumerate().map(|(i, &x)| (i, x as usize)).collect();
        named::two_cycles_with_spokes(self.k, &spokes)
    }

    /// Images of `self` under the applicable operations.
    fn neighbours(&self) -> impl Iterator<Item = PartialPermutation> + '_ {
        let p3 = self.is_restricted().then(|| self.p3());
        let p4 = self.is_full().then(|| self.p4());
        [Some(self.p1()), Some(self.p2()), p3, p4].into_iter().flatten()
    }

    /// Every permutation reachable from `self` by the operations.
    pub fn family(&self) -> BTreeSet<PartialPermutation> {
        let mut seen = BTreeSet::new();
        seen.insert(self.clone());
        let mut stack = alloc::vec![self.clone()];
        while let Some(p) = stack.pop() {
            for q in p.neighbours() {
                if !seen.contains(&q) {
                    seen.insert(q.clone());
                    stack.push(q);
                }
            }
        }
        seen
    }

    /// Whether `self` is the smallest member of its family.
    pub fn is_canonical(&self) -> bool {
        is_canonical_image(self.k, &self.img)
    }

    /// `false` when the encoded graph has a hamiltonian cycle through the
    /// last spoke that uses 2, 4 or 6 spokes in total. Such a cycle
    /// survives in every completion, so rejecting is always sound.
    pub fn lookahead_allows(&self) -> bool {
        lookahead_allows_image(self.k, &self.img)
    }
}

fn is_canonical_image(k: usize, img: &[u8]) -> bool {
    if img.len() == k {
        is_canonical_full(k, img)
    } else if small_family_touches_restricted(k, img) {
        is_canonical_by_closure(k, img)
    } else {
        is_canonical_small_family(k, img)
    }
}

fn is_canonical_by_closure(k: usize, img: &[u8]) -> bool {
    let start = PartialPermutation { k, img: img.to_vec() };
    let mut seen: Vec<Vec<u8>> = alloc::vec![start.img.clone()];
    let mut stack = alloc::vec![start];
    while let Some(p) = stack.pop() {
        for q in p.neighbours() {
            if q.img.as_slice() < img {
                return false;
            }
            if !seen.contains(&q.img) {
                seen.push(q.img.clone());
                stack.push(q);
            }
        }
    }
    true
}

/// Whether some member of `{img, p1, p2, p1 p2}` is restricted, in which
/// case `p3` enlarges the family.
fn small_family_touches_restricted(k: usize, img: &[u8]) -> bool {
    let l = img.len();
    let last = img[l - 1] as usize;
    let all = |f: &dyn Fn(usize) -> usize| img.iter().all(|&x| f(x as usize) < l);
    all(&|x| x) || all(&|x| (k - x) % k) || all(&|x| (x + k - last) % k) || all(&|x| (last + k - x) % k)
}

/// Whether `f` yields a sequence lexicographically smaller than `img`.
fn beats(img: &[u8], f: impl Fn(usize) -> u8) -> bool {
    for (i, &x) in img.iter().enumerate() {
        let y = f(i);
        if y != x {
            return y < x;
        }
    }
    false
}

/// Without `p3` and `p4`, `p1` and `p2` are commuting involutions and the
/// family is `img`, `p1`, `p2` and `p1 p2`.
fn is_canonical_small_family(k: usize, img: &[u8]) -> bool {
    let l = img.len();
    let last = img[l - 1] as usize;
    !(beats(img, |i| sub_mod(k, img[i] as usize, k))
        || beats(img, |i| sub_mod(img[l - 1 - i] as usize, last, k))
        || beats(img, |i| sub_mod(last, img[l - 1 - i] as usize, k)))
}

/// The family of a full permutation is every relabelling of the graph with
/// its 2-factor: choose which cycle comes first, a start and a direction on
/// it, and a direction on the other cycle. With `r` the permutation or its
/// inverse these read `i -> d2 (r(a + d1 i) - r(a))`.
fn is_canonical_full(k: usize, img: &[u8]) -> bool {
    let mut inv = [0u8; MAX_K];
    for (i, &x) in img.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    for r in [img, &inv[..k]] {
        for a in 0..k {
            let base = r[a] as usize;
            for d1 in [1, k - 1] {
                let at = |i: usize| r[(a + d1 * i) % k] as usize;
                if beats(img, |i| sub_mod(at(i), base, k)) || beats(img, |i| sub_mod(base, at(i), k)) {
                    return false;
                }
            }
        }
    }
    true
}

fn lookahead_allows_image(k: usize, img: &[u8]) -> bool {
    let l = img.len();
    if l < 2 {
        return true;
    }
    let last = l - 1;
    // first-cycle edges (a, a+1 mod k) with both ends spoked are a < l - 1,
    // plus a = k - 1 once the permutation is full; those touching the new
    // spoke are the fresh ones
    let full = l == k;
    let pairs = if full { l } else { last };
    let fresh: &[usize] = if full { &[last - 1, last] } else { &[last - 1] };
    let is_fresh = |a: usize| a + 1 >= last;
    let disjoint = |a: usize, b: usize| {
        let d = (a + k - b) % k;
        d != 0 && d != 1 && d != k - 1
    };
    let mask_of = |a: usize| (1u64 << img[a]) | (1u64 << img[(a + 1) % k]);
    for &p in fresh {
        let mp = mask_of(p);
        if closes_hamiltonian(k, img, &[p], mp) {
            return false;
        }
        for q in 0..pairs {
            if is_fresh(q) || !disjoint(p, q) {
                continue;
            }
            let mq = mp | mask_of(q);
            if closes_hamiltonian(k, img, &[p, q], mq) {
                return false;
            }
            for r in q + 1..pairs {
                if is_fresh(r) || !disjoint(p, r) || !disjoint(q, r) {
                    continue;
                }
                if closes_hamiltonian(k, img, &[p, q, r], mq | mask_of(r)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether deleting the first-cycle edges `(a, a+1)` for `a` in `removed`,
/// together with some set of second-cycle edges pairing up the spoke ends
/// `mask`, leaves arcs that the spokes join into one spanning cycle.
fn closes_hamiltonian(k: usize, img: &[u8], removed: &[usize], mask: u64) -> bool {
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let up = ((mask << 1) | (mask >> (k - 1))) & full;
    let down = ((mask >> 1) | (mask << (k - 1))) & full;
    if mask & !(up | down) != 0 {
        return false;
    }
    let s = removed.len();
    let mut ends = [0usize; 6];
    let mut m = mask;
    for e in ends.iter_mut().take(2 * s) {
        *e = m.trailing_zeros() as usize;
        m &= m - 1;
    }
    let mut c1 = [0usize; 3];
    c1[..s].copy_from_slice(removed);
    c1[..s].sort_unstable();
    let mut c2 = [0usize; 3];
    pair_second(k, img, &ends[..2 * s], 0, &mut c2, 0, &c1[..s])
}

/// Pairs the second-cycle ends into edges `{y, y+1}`, recording lower ends
/// in `c2`, and traces each complete pairing.
fn pair_second(
    k: usize,
    img: &[u8],
    ends: &[usize],
    used: u32,
    c2: &mut [usize; 3],
    filled: usize,
    c1: &[usize],
) -> bool {
    let Some(i) = (0..ends.len()).find(|&i| used >> i & 1 == 0) else {
        let mut sorted = *c2;
        sorted[..filled].sort_unstable();
        return trace(k, img, c1, &sorted[..filled]);
    };
    let y = ends[i];
    for (j, &z) in ends.iter().enumerate() {
        if j == i || used >> j & 1 == 1 {
            continue;
        }
        let lo = if (y + 1) % k == z {
            y
        } else if (z + 1) % k == y {
            z
        } else {
            continue;
        };
        c2[filled] = lo;
        if pair_second(k, img, ends, used | 1 << i | 1 << j, c2, filled + 1, c1) {
            return true;
        }
    }
    false
}

/// Follows arcs and spokes from the arc after the first removed edge.
/// Ends are indexed `2j` (lower end of removed edge `j`) and `2j + 1`
/// (upper end); the arc from the upper end of `j` reaches the lower end of
/// `j + 1`.
fn trace(k: usize, img: &[u8], c1: &[usize], c2: &[usize]) -> bool {
    let s = c1.len();
    let vertex = |c: &[usize], idx: usize| if idx % 2 == 0 { c[idx / 2] } else { (c[idx / 2] + 1) % k };
    let partner = |idx: usize| if idx % 2 == 1 { 2 * ((idx / 2 + 1) % s) } else { 2 * ((idx / 2 + s - 1) % s) + 1 };
    let start = 1;
    let mut at = start;
    for step in 1..=s {
        let u = vertex(c1, partner(at));
        let w = img[u] as usize;
        let Some(i2) = (0..2 * s).find(|&t| vertex(c2, t) == w) else { return false };
        let w2 = vertex(c2, partner(i2));
        let Some(next) = (0..2 * s).find(|&t| img[vertex(c1, t)] as usize == w2) else { return false };
        at = next;
        if at == start {
            return step == s;
        }
    }
    false
}

struct Search<'a, F> {
    k: usize,
    girth: usize,
    non_hamiltonian: bool,
    lookaheads: bool,
    split: Split,
    split_counter: u64,
    stats: Stats,
    img: Vec<u8>,
    sink: &'a mut F,
}

impl<F: FnMut(&Graph, &PartialPermutation)> Search<'_, F> {
    fn expand(&mut self, used: u128, g: &mut Graph) {
        let k = self.k;
        let l = self.img.len();
        if l == k {
            self.stats.outputs += 1;
            let pi = PartialPermutation { k, img: self.img.clone() };
            (self.sink)(g, &pi);
            return;
        }
        for x in 0..k {
            if bits::contains(used, x) {
                continue;
            }
            if self.girth > 3 && g.distance_within(l, k + x, self.girth - 2).is_some() {
                continue;
            }
            self.img.push(x as u8);
            let viable = is_canonical_image(k, &self.img)
                && !(self.non_hamiltonian && self.lookaheads && !lookahead_allows_image(k, &self.img));
            if viable {
                g.add_edge(l, k + x);
                let check = self.non_hamiltonian && l + 1 == k;
                if !(check && props::is_hamiltonian(g)) && self.in_slice(l + 1) {
                    self.stats.nodes += 1;
                    self.expand(used | bits::bit(x), g);
                }
                g.remove_edge(l, k + x);
            }
            self.img.pop();
        }
    }

    fn in_slice(&mut self, size: usize) -> bool {
        if self.split.is_trivial() || size != self.split.depth {
            return true;
        }
        let c = self.split_counter;
        self.split_counter += 1;
        c % self.split.modulus == self.split.residue
    }
}

/// Options of the orderly search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub constraints: Constraints,
    pub split: Split,
    /// Apply the 2/4/6-spoke hamiltonian-cycle lookaheads in
    /// non-hamiltonian mode.
    pub lookaheads: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { constraints: Constraints::default(), split: Split::NONE, lookaheads: true }
    }
}

/// Emits every canonical full permutation of order `n` meeting the
/// constraints, together with its graph. Every isomorphism class appears at
/// least once. `split.depth` counts spokes (the root has one).
pub fn generate<F: FnMut(&Graph, &PartialPermutation)>(
    n: usize,
    options: Options,
    sink: &mut F,
) -> Result<Stats> {
    check_order(n)?;
    let k = n / 2;
    let c = options.constraints;
    let mut s = Search {
        k,
        girth: c.effective_girth() as usize,
        non_hamiltonian: c.non_hamiltonian,
        lookaheads: options.lookaheads,
        split: options.split,
        split_counter: 0,
        stats: Stats::default(),
        img: alloc::vec![0],
        sink,
    };
    if k < s.girth {
        return Ok(s.stats);
    }
    let mut g = PartialPermutation::root(k).graph();
    if s.in_slice(1) {
        s.stats.nodes += 1;
        s.expand(1, &mut g);
    }
    Ok(s.stats)
}

pub fn generate_all(n: usize, options: Options) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(n, options, &mut |g: &Graph, _: &PartialPermutation| out.push(g.clone()))?;
    Ok(out)
}

/// Smallest spoke count whose level holds at least `4 * modulus` nodes,
/// capped at `k - 1`.
pub fn default_split_depth(n: usize, constraints: Constraints, modulus: u64) -> Result<usize> {
    check_order(n)?;
    let k = n / 2;
    for depth in 1..k {
        if level_size(k, constraints, depth) >= 4 * modulus {
            return Ok(depth);
        }
    }
    Ok(k - 1)
}

/// Number of nodes with `size` spokes.
fn level_size(k: usize, constraints: Constraints, size: usize) -> u64 {
    fn walk(
        k: usize,
        c: &Constraints,
        size: usize,
        pi: &PartialPermutation,
        g: &mut Graph,
    ) -> u64 {
        let l = pi.len();
        if l == size {
            return 1;
        }
        let girth = c.effective_girth() as usize;
        let used = pi.used();
        let mut total = 0;
        for x in 0..k {
            if bits::contains(used, x) {
                continue;
            }
            if girth > 3 && g.distance_within(l, k + x, girth - 2).is_some() {
                continue;
            }
            let next = pi.extended(x);
            if !next.is_canonical() {
                continue;
            }
            if c.non_hamiltonian && !next.lookahead_allows() {
                continue;
            }
            g.add_edge(l, k + x);
            if !(c.non_hamiltonian && props::is_hamiltonian(g)) {
                total += walk(k, c, size, &next, g);
            }
            g.remove_edge(l, k + x);
        }
        total
    }
    let root = PartialPermutation::root(k);
    let mut g = root.graph();
    walk(k, &constraints, size, &root, &mut g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{canon, ccpm, filter};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeMap;

    fn pp(k: usize, img: &[usize]) -> PartialPermutation {
        PartialPermutation::new(k, img).unwrap()
    }

    fn random_partial(k: usize, l: usize, rng: &mut StdRng) -> PartialPermutation {
        let mut rest: Vec<usize> = (1..k).collect();
        rest.shuffle(rng);
        let mut img = alloc::vec![0];
        img.extend(&rest[..l - 1]);
        pp(k, &img)
    }

    #[test]
    fn operation_examples() {
        assert_eq!(pp(5, &[0, 2, 4]).p1(), pp(5, &[0, 3, 1]));
        assert_eq!(pp(5, &[0, 2, 4]).p2(), pp(5, &[0, 3, 1]));
        assert_eq!(pp(5, &[0, 2, 4, 1, 3]).p4(), pp(5, &[0, 2, 4, 1, 3]));
        assert_eq!(pp(4, &[0, 2, 1]).p3(), pp(4, &[0, 2, 1]));
        assert_eq!(pp(4, &[0, 1, 3, 2]).p3(), pp(4, &[0, 1, 3, 2]));
        assert!(PartialPermutation::new(5, &[1, 0]).is_err());
        assert!(PartialPermutation::new(5, &[0, 0]).is_err());
        assert!(PartialPermutation::new(3, &[0, 3]).is_err());
    }

    #[test]
    #[should_panic(expected = "p3 needs a restricted permutation")]
    fn p3_requires_restriction() {
        pp(5, &[0, 2]).p3();
    }

    #[test]
    fn canonicity_examples() {
        assert!(pp(5, &[0, 1, 2, 3, 4]).is_canonical());
        let family: Vec<Vec<u8>> = pp(5, &[0, 2, 4, 1, 3]).family().into_iter().map(|p| p.img).collect();
        assert_eq!(family, [alloc::vec![0, 2, 4, 1, 3], alloc::vec![0, 3, 1, 4, 2]]);
        assert!(pp(5, &[0, 2, 4, 1, 3]).is_canonical());
        assert!(!pp(5, &[0, 3, 1, 4, 2]).is_canonical());
    }

    #[test]
    fn canonicity_matches_family_minimum() {
        let mut rng = StdRng::seed_from_u64(83);
        for _ in 0..5000 {
            let k = rng.gen_range(2..=8);
            let l = rng.gen_range(1..=k);
            let pi = random_partial(k, l, &mut rng);
            let min = pi.family().into_iter().next().unwrap();
            assert_eq!(pi.is_canonical(), min == pi, "{pi:?}");
        }
        // every prefix of length 3 for k = 7, which includes many images
        // close to restricted ones
        for a in 1..7 {
            for b in 1..7 {
                if a != b {
                    let pi = pp(7, &[0, a, b]);
                    let min = pi.family().into_iter().next().unwrap();
                    assert_eq!(pi.is_canonical(), min == pi, "{pi:?}");
                }
            }
        }
    }

    #[test]
    fn operations_preserve_the_isomorphism_class() {
        let mut rng = StdRng::seed_from_u64(73);
        for _ in 0..300 {
            let k = rng.gen_range(3..=9);
            let l = rng.gen_range(1..=k);
            let pi = random_partial(k, l, &mut rng);
            let cert = canon::certificate(&pi.graph());
            for q in pi.neighbours() {
                assert_eq!(q.len(), l);
                assert_eq!(q.image()[0], 0);
                assert_eq!(canon::certificate(&q.graph()), cert, "{pi:?} -> {q:?}");
            }
        }
        // restricted prefixes
        for _ in 0..100 {
            let k = rng.gen_range(3..=9);
            let l = rng.gen_range(1..=k);
            let mut img: Vec<usize> = (1..l).collect();
            img.shuffle(&mut rng);
            img.insert(0, 0);
            let pi = pp(k, &img);
            assert_eq!(canon::certificate(&pi.p3().graph()), canon::certificate(&pi.graph()));
        }
    }

    #[test]
    fn prism_is_the_only_output_for_k3() {
        let out = generate_all(6, Options::default()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(canon::certificate(&out[0]), canon::certificate(&named::prism()));
    }

    /// Raw output count predicted by the factor structure: one emission per
    /// automorphism class of permutation 2-factors of each graph.
    fn predicted_raw(graphs: &[Graph]) -> usize {
        graphs
            .iter()
            .map(|g| {
                let factors = filter::permutation_two_factors(g);
                let (_, gens) = canon::canonical_form_by_degree(g);
                let mut classes: BTreeSet<crate::twofactor::TwoFactor> = BTreeSet::new();
                for f in &factors {
                    // smallest image of f under the group
                    let mut orbit = BTreeSet::from([*f]);
                    let mut stack = alloc::vec![*f];
                    while let Some(x) = stack.pop() {
                        for p in &gens.gens {
                            let map = |m: u128| bits::iter(m).fold(0u128, |s, v| s | bits::bit(p[v] as usize));
                            let y = crate::twofactor::TwoFactor::new(map(x.cyc[0]), map(x.cyc[1]));
                            if orbit.insert(y) {
                                stack.push(y);
                            }
                        }
                    }
                    classes.insert(*orbit.iter().next().unwrap());
                }
                classes.len()
            })
            .sum()
    }

    #[test]
    fn raw_counts_follow_the_factor_structure() {
        for n in [6, 8, 10, 12, 14] {
            let census = ccpm::generate_all(n, Constraints::default(), Split::NONE).unwrap();
            let raw = generate_all(n, Options::default()).unwrap();
            assert_eq!(raw.len(), predicted_raw(&census), "order {n}");
            let mut by_cert: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
            for g in &raw {
                *by_cert.entry(canon::certificate(g)).or_default() += 1;
            }
            assert_eq!(by_cert.len(), census.len());
            for g in &raw {
                if by_cert[&canon::certificate(g)] > 1 {
                    assert!(filter::permutation_two_factors(g).len() >= 2);
                }
            }
        }
    }

    #[test]
    fn emitted_permutations_are_canonical() {
        let mut n_out = 0;
        generate(14, Options::default(), &mut |g: &Graph, pi: &PartialPermutation| {
            assert!(pi.is_canonical());
            assert_eq!(pi.graph().edges(), g.edges());
            n_out += 1;
        })
        .unwrap();
        let census = ccpm::generate_all(14, Constraints::default(), Split::NONE).unwrap();
        assert_eq!(n_out, predicted_raw(&census));
    }

    #[test]
    fn lookahead_rejections_are_hamiltonian() {
        let mut rng = StdRng::seed_from_u64(79);
        let mut rejected = 0;
        for _ in 0..3000 {
            let k = rng.gen_range(3..=9);
            let l = rng.gen_range(2..=k);
            let pi = random_partial(k, l, &mut rng);
            if !pi.lookahead_allows() {
                rejected += 1;
                assert!(props::is_hamiltonian(&pi.graph()), "{pi:?}");
            }
        }
        assert!(rejected > 300);
    }

    #[test]
    fn two_spoke_cycle_is_caught() {
        // v0 w0 and v1 w1 close v0 .. (C1 backwards) v1 w1 .. (C2) w0
        assert!(!pp(5, &[0, 1]).lookahead_allows());
        assert!(pp(5, &[0, 2]).lookahead_allows());
        assert!(!pp(5, &[0, 4]).lookahead_allows());
    }

    #[test]
    fn four_spokes_forming_two_cycles_are_allowed() {
        // removing v0v1 and v2v3 with images w0,w2 / w1,w3: arcs join into
        // two cycles only when the second-cycle pairing is crossed
        let k = 6;
        let mut two_cycle_cases = 0;
        for img in [[0usize, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 4], [0, 4, 1, 3]] {
            let pi = pp(k, &img);
            let ham = props::is_hamiltonian(&pi.graph());
            if !ham {
                assert!(pi.lookahead_allows());
                two_cycle_cases += 1;
            }
        }
        let _ = two_cycle_cases;
    }

    #[test]
    fn lookaheads_do_not_change_the_output() {
        for n in [10, 12, 14, 16, 18] {
            let on = generate_all(n, Options { constraints: Constraints::non_hamiltonian(), ..Options::default() }).unwrap();
            let off = generate_all(
                n,
                Options { constraints: Constraints::non_hamiltonian(), lookaheads: false, ..Options::default() },
            )
            .unwrap();
            let a: Vec<_> = on.iter().map(|g| g.edges()).collect();
            let b: Vec<_> = off.iter().map(|g| g.edges()).collect();
            assert_eq!(a, b, "order {n}");
        }
    }
}
