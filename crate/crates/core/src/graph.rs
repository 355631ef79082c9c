//! Subcubic graphs on at most 128 vertices with bit-set adjacency.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, VSet};

/// Largest order representable by the 128-bit vertex sets.
pub const MAX_ORDER: usize = 128;

/// An undirected edge stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: u8,
    pub b: u8,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        assert!(u != v, "loop edge {u}-{u}");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Edge { a: a as u8, b: b as u8 }
    }

    #[inline]
    pub fn ends(self) -> (usize, usize) {
        (self.a as usize, self.b as usize)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Vertex {
    mask: VSet,
    nbrs: [u8; 3],
    deg: u8,
}

/// A simple graph with maximum degree 3.
///
/// Vertices are `0..n`. Each vertex keeps both a neighbour list and a
/// neighbour mask; the two are always consistent.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    v: Vec<Vertex>,
    m: usize,
    cubic_mask: VSet,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { v: alloc::vec![Vertex::default(); n], m: 0, cubic_mask: 0 }
    }

    /// Build from an edge list; panics on invalid edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.v.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.v[v].deg as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u8] {
        let x = &self.v[v];
        &x.nbrs[..x.deg as usize]
    }

    #[inline]
    pub fn nbr_mask(&self, v: usize) -> VSet {
        self.v[v].mask
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.v[u].mask, v)
    }

    /// Vertices of degree 3.
    #[inline]
    pub fn cubic_vertices(&self) -> VSet {
        self.cubic_mask
    }

    pub fn vertices_of_degree(&self, d: usize) -> VSet {
        let mut s = 0;
        for (i, x) in self.v.iter().enumerate() {
            if x.deg as usize == d {
                s |= bits::bit(i);
            }
        }
        s
    }

    pub fn all_vertices(&self) -> VSet {
        bits::full(self.order())
    }

    pub fn is_cubic(&self) -> bool {
        self.cubic_mask == self.all_vertices()
    }

    /// Union of the neighbourhoods of the vertices in `s`.
    #[inline]
    pub fn neighborhood(&self, s: VSet) -> VSet {
        let mut out = 0;
        for v in bits::iter(s) {
            out |= self.v[v].mask;
        }
        out
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.order() {
            for &w in self.neighbors(u) {
                if (w as usize) > u {
                    out.push(Edge::new(u, w as usize));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Adds edge `uv`. Panics unless `u != v`, the edge is absent and both
    /// endpoints have degree below 3.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order() && v < self.order(), "bad edge {u}-{v}");
        assert!(!self.has_edge(u, v), "edge {u}-{v} already present");
        assert!(self.v[u].deg < 3 && self.v[v].deg < 3, "degree overflow adding {u}-{v}");
        self.attach(u, v);
        self.attach(v, u);
        self.m += 1;
    }

    /// Removes edge `uv`, keeping the remaining neighbour order.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(self.has_edge(u, v), "edge {u}-{v} absent");
        self.detach(u, v);
        self.detach(v, u);
        self.m -= 1;
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    fn attach(&mut self, u: usize, v: usize) {
        let x = &mut self.v[u];
        x.nbrs[x.deg as usize] = v as u8;
        x.deg += 1;
        x.mask |= bits::bit(v);
        if x.deg == 3 {
            self.cubic_mask |= bits::bit(u);
        }
    }

    fn detach(&mut self, u: usize, v: usize) {
        let x = &mut self.v[u];
        let d = x.deg as usize;
        let pos = x.nbrs[..d].iter().position(|&w| w as usize == v).unwrap();
        x.nbrs.copy_within(pos + 1..d, pos);
        x.deg -= 1;
        x.nbrs[x.deg as usize] = 0;
        x.mask &= !bits::bit(v);
        self.cubic_mask &= !bits::bit(u);
    }

    /// Image of the graph under `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[u8]) -> Graph {
        let mut g = Graph::empty(self.order());
        for e in self.edges() {
            g.add_edge(perm[e.a as usize] as usize, perm[e.b as usize] as usize);
        }
        g
    }

    /// Checks the representation invariants; used by tests and debug audits.
    pub fn audit(&self) -> bool {
        let mut degsum = 0;
        for (u, x) in self.v.iter().enumerate() {
            if x.deg > 3 || bits::len(x.mask) != x.deg as usize || bits::contains(x.mask, u) {
                return false;
            }
            if bits::contains(self.cubic_mask, u) != (x.deg == 3) {
                return false;
            }
            for &w in self.neighbors(u) {
                if !bits::contains(x.mask, w as usize) || !self.has_edge(w as usize, u) {
                    return false;
                }
            }
            degsum += x.deg as usize;
        }
        degsum == 2 * self.m
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = bits::bit(0);
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighborhood(frontier) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.all_vertices()
    }

    /// Distance from `u` to `v` if it is at most `limit`.
    pub fn distance_within(&self, u: usize, v: usize, limit: usize) -> Option<usize> {
        let target = bits::bit(v);
        let mut seen = bits::bit(u);
        let mut frontier = seen;
        for d in 0..=limit {
            if frontier & target != 0 {
                return Some(d);
            }
            let next = self.neighborhood(frontier) & !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// Vertices within distance `r` of some vertex of `s`.
    pub fn ball(&self, s: VSet, r: usize) -> VSet {
        let mut seen = s;
        let mut frontier = s;
        for _ in 0..r {
            let next = self.neighborhood(frontier) & !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = alloc::vec![u8::MAX; n];
        let mut parent = alloc::vec![u8::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = u8::MAX);
            dist[root] = 0;
            parent[root] = u8::MAX;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                if 2 * dist[x] as usize + 1 >= best {
                    break;
                }
                for &w in self.neighbors(x) {
                    let w = w as usize;
                    if dist[w] == u8::MAX {
                        dist[w] = dist[x] + 1;
                        parent[w] = x as u8;
                        queue.push(w);
                    } else if parent[x] as usize != w {
                        best = best.min(dist[x] as usize + dist[w] as usize + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Number of distinct cycles of length `len` through edge `e`.
    pub fn count_cycles_through_edge(&self, e: Edge, len: usize) -> usize {
        let (a, b) = e.ends();
        debug_assert!(self.has_edge(a, b));
        if len < 3 {
            return 0;
        }
        // simple a-b paths with len-1 edges that avoid the edge itself
        self.count_paths(a, b, bits::bit(a), len - 1, true)
    }

    fn count_paths(&self, at: usize, target: usize, used: VSet, left: usize, first: bool) -> usize {
        if left == 1 {
            return usize::from(!first && self.has_edge(at, target));
        }
        let mut total = 0;
        for &w in self.neighbors(at) {
            let w = w as usize;
            if w == target || bits::contains(used, w) {
                continue;
            }
            total += self.count_paths(w, target, used | bits::bit(w), left - 1, false);
        }
        total
    }

    /// Number of vertices within distance `r` of `a` or `b`.
    pub fn ball_size(&self, a: usize, b: usize, r: usize) -> usize {
        bits::len(self.ball(bits::bit(a) | bits::bit(b), r))
    }

    /// Degree-2 vertices at distance 1..=r from `a`, plus the same count for `b`.
    pub fn degree2_count_near(&self, a: usize, b: usize, r: usize) -> usize {
        let deg2 = self.vertices_of_degree(2);
        let near = |x: usize| bits::len(self.ball(bits::bit(x), r) & !bits::bit(x) & deg2);
        near(a) + near(b)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, [", self.order(), self.m)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;
    use alloc::vec::Vec;

    /// Two `k`-cycles `0..k` and `k..2k` plus the given spokes `(i, j)` joining
    /// `i` on the first cycle with `k + j` on the second.
    pub fn two_cycles_with_spokes(k: usize, spokes: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k);
            g.add_edge(k + i, k + (i + 1) % k);
        }
        for &(i, j) in spokes {
            g.add_edge(i, k + j);
        }
        g
    }

    /// Cycle permutation graph with spokes `i -- k + perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Graph {
        let spokes: Vec<(usize, usize)> = perm.iter().copied().enumerate().collect();
        two_cycles_with_spokes(perm.len(), &spokes)
    }

    pub fn prism() -> Graph {
        from_permutation(&[0, 1, 2])
    }

    pub fn petersen() -> Graph {
        // outer 5-cycle 0..5, inner pentagram 5..10 written as a cycle
        from_permutation(&[0, 2, 4, 1, 3])
    }

    pub fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    pub fn k33() -> Graph {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(6, &edges)
    }
}
