//! Hamiltonicity, 3-edge-colourability and cyclic edge connectivity of
//! (sub)cubic graphs.

use alloc::vec::Vec;

use crate::bits::{self, VSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::unionfind::UnionFind;

struct Ham<'a> {
    g: &'a Graph,
    start: usize,
}

impl Ham<'_> {
    /// Number of edges `w` could still use in a spanning cycle that extends
    /// the current path.
    #[inline]
    fn avail(&self, w: usize, unvisited: VSet, end: usize) -> usize {
        bits::len(self.g.nbr_mask(w) & (unvisited | bits::bit(end) | bits::bit(self.start)))
    }

    /// `unvisited` excludes the path, whose ends are `start` and `end`.
    fn extend(&self, end: usize, unvisited: VSet) -> bool {
        let g = self.g;
        if unvisited == 0 {
            return g.has_edge(end, self.start);
        }
        if g.nbr_mask(self.start) & (unvisited | bits::bit(end)) == 0 {
            return false;
        }
        let cand = g.nbr_mask(end) & unvisited;
        let mut forced: VSet = 0;
        for w in bits::iter(cand) {
            if self.avail(w, unvisited, end) == 2 && !bits::contains(g.nbr_mask(w), self.start) {
                forced |= bits::bit(w);
            }
        }
        let choices = match bits::len(forced) {
            0 => cand,
            1 => forced,
            _ => return false,
        };
        for y in bits::iter(choices) {
            let rest = unvisited & !bits::bit(y);
            // vertices that just lost `end` as a usable neighbour
            let hit = g.nbr_mask(end) & rest;
            if bits::iter(hit).any(|w| self.avail(w, rest, y) < 2) {
                continue;
            }
            if self.extend(y, rest) {
                return true;
            }
        }
        false
    }
}

/// Whether `g` has a spanning cycle. Degree-2 vertices force both of their
/// edges, so intermediate graphs are decided quickly.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return false;
    }
    let deg2 = g.vertices_of_degree(2);
    let start = bits::first(deg2).unwrap_or(0);
    let h = Ham { g, start };
    let all = g.all_vertices() & !bits::bit(start);
    // a spanning cycle uses two of the start's edges; leaving along either of
    // the first two neighbours covers every pair
    let nb = g.neighbors(start);
    nb.iter().take(2).any(|&y| {
        let y = y as usize;
        let rest = all & !bits::bit(y);
        h.extend(y, rest)
    })
}

/// Whether the cubic graph `g` has a proper 3-edge-colouring.
pub fn is_three_edge_colorable(g: &Graph) -> bool {
    assert!(g.is_cubic(), "3-edge-colouring is defined here for cubic graphs");
    let n = g.order();
    if n == 0 {
        return true;
    }
    // edges in BFS order so that every edge after the first touches a
    // coloured one
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(g.size());
    let mut seen_v = bits::bit(0);
    let mut queue = alloc::vec![0usize];
    let mut head = 0;
    let mut placed = alloc::vec![0 as VSet; n];
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &w in g.neighbors(x) {
            let w = w as usize;
            if !bits::contains(placed[x], w) {
                placed[x] |= bits::bit(w);
                placed[w] |= bits::bit(x);
                order.push((x, w));
            }
            if !bits::contains(seen_v, w) {
                seen_v |= bits::bit(w);
                queue.push(w);
            }
        }
    }
    if order.len() != g.size() {
        // disconnected: colour each component separately
        return components(g).iter().all(|&c| {
            let verts: Vec<usize> = bits::iter(c).collect();
            let mut idx = alloc::vec![0usize; n];
            for (i, &v) in verts.iter().enumerate() {
                idx[v] = i;
            }
            let mut sub = Graph::empty(verts.len());
            for e in g.edges() {
                if bits::contains(c, e.a as usize) {
                    sub.add_edge(idx[e.a as usize], idx[e.b as usize]);
                }
            }
            is_three_edge_colorable(&sub)
        });
    }
    let mut used = alloc::vec![0u8; n];
    color_edges(&order, 0, &mut used)
}

fn color_edges(order: &[(usize, usize)], i: usize, used: &mut [u8]) -> bool {
    let Some(&(a, b)) = order.get(i) else { return true };
    let free = !(used[a] | used[b]) & 0b111;
    // the first edge's colour is arbitrary
    let free = if i == 0 { 1 } else { free };
    for c in 0..3 {
        let bit = 1u8 << c;
        if free & bit == 0 {
            continue;
        }
        used[a] |= bit;
        used[b] |= bit;
        if color_edges(order, i + 1, used) {
            return true;
        }
        used[a] &= !bit;
        used[b] &= !bit;
    }
    false
}

fn components(g: &Graph) -> Vec<VSet> {
    let mut left = g.all_vertices();
    let mut out = Vec::new();
    while let Some(v) = bits::first(left) {
        let c = g.ball(bits::bit(v), g.order());
        out.push(c);
        left &= !c;
    }
    out
}

/// Whether every edge set of size less than `t` that disconnects `g` leaves
/// at most one component containing a cycle. Thresholds above 5 are refused.
pub fn cyclic_edge_connectivity_at_least(g: &Graph, t: u32) -> Result<bool> {
    if t > 5 {
        return Err(Error::ThresholdTooLarge(t));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut chosen: Vec<usize> = Vec::with_capacity(t as usize);
    for size in 0..t as usize {
        if size > m {
            break;
        }
        chosen.clear();
        chosen.extend(0..size);
        loop {
            if separates_cycles(g, &edges, &chosen) {
                return Ok(false);
            }
            // next combination in lexicographic order
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if chosen[i] < m - size + i {
                    chosen[i] += 1;
                    for j in i + 1..size {
                        chosen[j] = chosen[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    Ok(true)
}

fn separates_cycles(g: &Graph, edges: &[crate::graph::Edge], removed: &[usize]) -> bool {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    let mut r = 0;
    for (i, e) in edges.iter().enumerate() {
        if r < removed.len() && removed[r] == i {
            r += 1;
            continue;
        }
        uf.union(e.a as usize, e.b as usize);
    }
    let mut verts = alloc::vec![0usize; n];
    let mut ecount = alloc::vec![0usize; n];
    for v in 0..n {
        verts[uf.find(v)] += 1;
    }
    r = 0;
    for (i, e) in edges.iter().enumerate() {
        if r < removed.len() && removed[r] == i {
            r += 1;
            continue;
        }
        ecount[uf.find(e.a as usize)] += 1;
    }
    (0..n).filter(|&c| verts[c] > 0 && ecount[c] >= verts[c]).count() >= 2
}

/// Property record of a cubic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub girth: Option<usize>,
    pub hamiltonian: bool,
    pub colorable: bool,
    pub lambda_c_ge_5: bool,
}

pub fn classify(g: &Graph) -> Classification {
    Classification {
        girth: g.girth(),
        hamiltonian: is_hamiltonian(g),
        colorable: is_three_edge_colorable(g),
        lambda_c_ge_5: cyclic_edge_connectivity_at_least(g, 5).expect("threshold 5 is supported"),
    }
}
