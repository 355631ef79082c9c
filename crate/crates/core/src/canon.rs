//! Canonical labelling and automorphism generators by individualization and
//! refinement.
//!
//! Colours are refined to an equitable ordered partition; the search tree
//! individualizes vertices of the first non-singleton cell. The canonical
//! leaf is the maximum over `(node invariants along the path, relabelled
//! adjacency)`. Leaves that compare equal to the first or best leaf yield
//! automorphisms, which prune the first path by orbits and trigger back-jumps
//! elsewhere. The generators found this way generate the full
//! colour-preserving automorphism group.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::unionfind::UnionFind;

/// Canonical labelling of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<u8>,
    /// graph6 of the canonically relabelled graph; equal iff isomorphic.
    pub cert: Vec<u8>,
}

/// Generators of the colour-preserving automorphism group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AutGenerators {
    pub gens: Vec<Vec<u8>>,
}

impl AutGenerators {
    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Vertex orbits as the smallest member of each class.
    pub fn vertex_orbits(&self, n: usize) -> Vec<usize> {
        let mut uf = UnionFind::new(n);
        for g in &self.gens {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w as usize);
            }
        }
        (0..n).map(|v| uf.find(v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct NodeInv {
    cells: u8,
    hash: u64,
    target: u8,
}

struct Leaf {
    inv: Vec<NodeInv>,
    path: Vec<u8>,
    /// vertex -> position
    pos: Vec<u8>,
    rows: Vec<u128>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<u8>>,
    inv: Vec<NodeInv>,
    path: Vec<u8>,
    keys: Vec<u64>,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

impl<'a> Search<'a> {
    /// Refines `cell` (vertex -> cell start) to the coarsest equitable
    /// refinement. Returns the node invariant.
    fn refine(&mut self, cell: &mut [u8]) -> NodeInv {
        let n = self.n;
        let mut ncells = count_cells(cell);
        let mut rounds = 0u64;
        loop {
            rounds += 1;
            self.keys.clear();
            for v in 0..n {
                let mut nb = [0xffu8; 3];
                for (slot, &w) in self.g.neighbors(v).iter().enumerate() {
                    nb[slot] = cell[w as usize];
                }
                nb.sort_unstable();
                let key = (cell[v] as u64) << 24
                    | (nb[0] as u64) << 16
                    | (nb[1] as u64) << 8
                    | nb[2] as u64;
                self.keys.push(key << 8 | v as u64);
            }
            self.keys.sort_unstable();
            let mut start = 0u8;
            let mut prev = u64::MAX;
            let mut cells = 0usize;
            for (p, &k) in self.keys.iter().enumerate() {
                let key = k >> 8;
                if key != prev {
                    start = p as u8;
                    prev = key;
                    cells += 1;
                }
                cell[(k & 0xff) as usize] = start;
            }
            if cells == ncells {
                break;
            }
            ncells = cells;
        }
        let mut h = FNV_OFFSET ^ rounds;
        for &k in &self.keys {
            h = (h ^ (k >> 8)).wrapping_mul(FNV_PRIME);
        }
        NodeInv { cells: ncells as u8, hash: h, target: target_cell(cell).unwrap_or(0xff) }
    }

    fn rows(&self, pos: &[u8]) -> Vec<u128> {
        let mut rows = alloc::vec![0u128; self.n];
        for v in 0..self.n {
            let mut r = 0u128;
            for &w in self.g.neighbors(v) {
                r |= 1u128 << pos[w as usize];
            }
            rows[pos[v] as usize] = r;
        }
        rows
    }

    fn leaf(&self, cell: &[u8]) -> Leaf {
        Leaf {
            inv: self.inv.clone(),
            path: self.path.clone(),
            pos: cell.to_vec(),
            rows: self.rows(cell),
        }
    }

    /// Automorphism mapping leaf `from` onto the leaf with positions `to`.
    fn automorphism(&self, from: &[u8], to: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut at = alloc::vec![0u8; n];
        for v in 0..n {
            at[to[v] as usize] = v as u8;
        }
        let gamma: Vec<u8> = (0..n).map(|v| at[from[v] as usize]).collect();
        debug_assert!(self.g.edges().iter().all(|e| {
            self.g.has_edge(gamma[e.a as usize] as usize, gamma[e.b as usize] as usize)
        }));
        gamma
    }

    fn add_generator(&mut self, gamma: Vec<u8>) {
        if gamma.iter().enumerate().any(|(v, &w)| v != w as usize) {
            self.gens.push(gamma);
        }
    }

    fn on_first_path(&self) -> bool {
        match &self.first {
            None => true,
            Some(f) => f.path.len() >= self.path.len() && f.path[..self.path.len()] == self.path[..],
        }
    }

    /// Explores the subtree rooted at the current path. Returns `Some(level)`
    /// when the search should resume at the ancestor on that level.
    fn dfs(&mut self, mut cell: Vec<u8>) -> Option<usize> {
        let level = self.path.len();
        let node = self.refine(&mut cell);
        self.inv.push(node);
        let res = self.visit(cell, level);
        self.inv.pop();
        res
    }

    fn visit(&mut self, cell: Vec<u8>, level: usize) -> Option<usize> {
        let eq_first = self.first.as_ref().map(|f| prefix_eq(&f.inv, &self.inv));
        let cmp_best = self.best.as_ref().map(|b| prefix_cmp(&self.inv, &b.inv));
        if eq_first == Some(false) && cmp_best == Some(Ordering::Less) {
            return None;
        }
        let node = *self.inv.last().unwrap();
        if node.cells as usize == self.n {
            return self.at_leaf(&cell);
        }
        let target = node.target;
        let mut members: Vec<u8> =
            (0..self.n as u8).filter(|&v| cell[v as usize] == target).collect();
        members.sort_unstable();
        let first_path_node = self.first.is_some() && self.on_first_path();
        let mut explored: Vec<u8> = Vec::new();
        for &v in &members {
            if first_path_node && self.equivalent_to_explored(v, &explored) {
                continue;
            }
            let mut child = cell.clone();
            for &w in &members {
                if w != v {
                    child[w as usize] = target + 1;
                }
            }
            self.path.push(v);
            let r = self.dfs(child);
            self.path.pop();
            explored.push(v);
            if let Some(j) = r {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn at_leaf(&mut self, cell: &[u8]) -> Option<usize> {
        let Some(first) = &self.first else {
            let leaf = self.leaf(cell);
            self.best = Some(Leaf {
                inv: leaf.inv.clone(),
                path: leaf.path.clone(),
                pos: leaf.pos.clone(),
                rows: leaf.rows.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let rows = self.rows(cell);
        if first.inv == self.inv && first.rows == rows {
            let gamma = self.automorphism(&first.pos, cell);
            let j = common_prefix(&first.path, &self.path);
            self.add_generator(gamma);
            return Some(j);
        }
        let best = self.best.as_ref().unwrap();
        let ord = prefix_cmp(&self.inv, &best.inv).then_with(|| rows.cmp(&best.rows));
        match ord {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    inv: self.inv.clone(),
                    path: self.path.clone(),
                    pos: cell.to_vec(),
                    rows,
                });
                None
            }
            Ordering::Equal => {
                let gamma = self.automorphism(&best.pos, cell);
                let j = common_prefix(&best.path, &self.path);
                self.add_generator(gamma);
                Some(j)
            }
            Ordering::Less => None,
        }
    }

    /// Whether `v` is in the orbit of an explored sibling under the group
    /// generated by the known generators that fix the current path.
    fn equivalent_to_explored(&self, v: u8, explored: &[u8]) -> bool {
        if explored.is_empty() || self.gens.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for g in &self.gens {
            if self.path.iter().all(|&p| g[p as usize] == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    uf.union(x, y as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let r = uf.find(v as usize);
        explored.iter().any(|&u| uf.find(u as usize) == r)
    }
}

fn count_cells(cell: &[u8]) -> usize {
    let mut seen = [0u128; 2];
    for &c in cell {
        seen[(c >> 7) as usize] |= 1u128 << (c & 127);
    }
    (seen[0].count_ones() + seen[1].count_ones()) as usize
}

/// Start of the first cell with more than one vertex.
fn target_cell(cell: &[u8]) -> Option<u8> {
    let mut size = [0u8; 256];
    for &c in cell {
        size[c as usize] += 1;
    }
    (0..cell.len()).find(|&c| size[c] > 1).map(|c| c as u8)
}

fn prefix_eq(full: &[NodeInv], prefix: &[NodeInv]) -> bool {
    full.len() >= prefix.len() && full[..prefix.len()] == *prefix
}

fn prefix_cmp(a: &[NodeInv], b: &[NodeInv]) -> Ordering {
    let k = a.len().min(b.len());
    a[..k].cmp(&b[..k])
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Canonical form and automorphism generators of `g` with respect to the
/// vertex colouring `colors` (which must be isomorphism-invariant).
pub fn canonical_form(g: &Graph, colors: &[u32]) -> (CanonicalForm, AutGenerators) {
    let n = g.order();
    assert_eq!(colors.len(), n);
    if n == 0 {
        let cf = CanonicalForm { labeling: Vec::new(), cert: graph6::encode(g) };
        return (cf, AutGenerators::default());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut cell = alloc::vec![0u8; n];
    let mut start = 0;
    for (p, &v) in order.iter().enumerate() {
        if p > 0 && colors[v] != colors[order[p - 1]] {
            start = p;
        }
        cell[v] = start as u8;
    }
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
        inv: Vec::new(),
        path: Vec::new(),
        keys: Vec::with_capacity(n),
    };
    s.dfs(cell);
    let best = s.best.take().unwrap();
    let canon = g.relabel(&best.pos);
    let cf = CanonicalForm { labeling: best.pos, cert: graph6::encode(&canon) };
    (cf, AutGenerators { gens: s.gens })
}

/// Canonical form with vertices coloured by degree.
pub fn canonical_form_by_degree(g: &Graph) -> (CanonicalForm, AutGenerators) {
    let colors: Vec<u32> = (0..g.order()).map(|v| g.degree(v) as u32).collect();
    canonical_form(g, &colors)
}

/// Isomorphism-class certificate (degree colouring is implied by the graph).
pub fn certificate(g: &Graph) -> Vec<u8> {
    canonical_form_by_degree(g).0.cert
}

/// Orbit representative index for each pair, treating `(u, v)` and `(v, u)`
/// as the same pair. Each orbit is represented by its earliest pair.
pub fn pair_orbits(gens: &AutGenerators, pairs: &[(u8, u8)]) -> Vec<usize> {
    let norm = |(a, b): (u8, u8)| if a < b { (a, b) } else { (b, a) };
    let mut index: Vec<((u8, u8), usize)> =
        pairs.iter().enumerate().map(|(i, &p)| (norm(p), i)).collect();
    index.sort_unstable();
    let lookup = |p: (u8, u8)| {
        index.binary_search_by(|probe| probe.0.cmp(&p)).ok().map(|k| index[k].1)
    };
    let mut uf = UnionFind::new(pairs.len());
    // duplicates in the input belong to one orbit
    for w in index.windows(2) {
        if w[0].0 == w[1].0 {
            uf.union(w[0].1, w[1].1);
        }
    }
    for g in &gens.gens {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            let img = norm((g[a as usize], g[b as usize]));
            if let Some(j) = lookup(img) {
                uf.union(i, j);
            }
        }
    }
    (0..pairs.len()).map(|i| uf.find(i)).collect()
}

/// Orbit-label of every edge: the lexicographically largest
/// `(max label, min label)` over the edge's automorphism orbit.
pub fn edge_orbit_labels(
    g: &Graph,
    cf: &CanonicalForm,
    gens: &AutGenerators,
) -> Vec<(Edge, (u8, u8))> {
    let edges = g.edges();
    let pairs: Vec<(u8, u8)> = edges.iter().map(|e| (e.a, e.b)).collect();
    let orbit = pair_orbits(gens, &pairs);
    let label = |e: &Edge| {
        let (x, y) = (cf.labeling[e.a as usize], cf.labeling[e.b as usize]);
        (x.max(y), x.min(y))
    };
    let mut best = alloc::vec![(0u8, 0u8); edges.len()];
    for (i, e) in edges.iter().enumerate() {
        let r = orbit[i];
        best[r] = best[r].max(label(e));
    }
    edges.iter().enumerate().map(|(i, &e)| (e, best[orbit[i]])).collect()
}

/// `(x8, x9)` of an edge: its orbit label in the canonical labelling.
pub fn edge_orbit_label(g: &Graph, e: Edge) -> (u8, u8) {
    let (cf, gens) = canonical_form_by_degree(g);
    edge_orbit_labels(g, &cf, &gens)
        .into_iter()
        .find(|(f, _)| *f == e)
        .map(|(_, l)| l)
        .expect("edge not in graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use alloc::collections::BTreeSet;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_perm(n: usize, rng: &mut StdRng) -> Vec<u8> {
        let mut p: Vec<u8> = (0..n as u8).collect();
        p.shuffle(rng);
        p
    }

    /// All automorphisms by brute force over n! bijections.
    fn brute_automorphisms(g: &Graph) -> Vec<Vec<u8>> {
        let n = g.order();
        let edges = g.edges();
        let mut out = Vec::new();
        let mut perm: Vec<u8> = Vec::new();
        fn rec(g: &Graph, edges: &[Edge], perm: &mut Vec<u8>, used: u128, out: &mut Vec<Vec<u8>>) {
            let n = g.order();
            let k = perm.len();
            if k == n {
                if edges.iter().all(|e| g.has_edge(perm[e.a as usize] as usize, perm[e.b as usize] as usize)) {
                    out.push(perm.clone());
                }
                return;
            }
            for w in 0..n {
                if used >> w & 1 == 1 || g.degree(w) != g.degree(k) {
                    continue;
                }
                // partial adjacency check against already placed vertices
                if (0..k).any(|u| g.has_edge(u, k) != g.has_edge(perm[u] as usize, w)) {
                    continue;
                }
                perm.push(w as u8);
                rec(g, edges, perm, used | 1 << w, out);
                perm.pop();
            }
        }
        rec(g, &edges, &mut perm, 0, &mut out);
        let _ = n;
        out
    }

    fn group_closure(n: usize, gens: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
        let id: Vec<u8> = (0..n as u8).collect();
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut stack = alloc::vec![id];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Vec<u8> = (0..n).map(|v| g[p[v] as usize]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen
    }

    fn random_subcubic(n: usize, tries: usize, rng: &mut StdRng) -> Graph {
        let mut g = Graph::empty(n);
        for _ in 0..tries {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3 {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn petersen_cert_is_label_invariant_and_group_has_order_120() {
        let p = named::petersen();
        let (cf, gens) = canonical_form_by_degree(&p);
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let q = p.relabel(&random_perm(10, &mut rng));
            assert_eq!(certificate(&q), cf.cert);
        }
        assert_eq!(group_closure(10, &gens.gens).len(), 120);
        assert_eq!(brute_automorphisms(&p).len(), 120);
    }

    #[test]
    fn prism_and_k33_differ() {
        assert_ne!(certificate(&named::prism()), certificate(&named::k33()));
    }

    #[test]
    fn asymmetric_cubic_graph_has_no_generators() {
        let mut rng = StdRng::seed_from_u64(3);
        let mut found = false;
        for _ in 0..200 {
            let mut perm: Vec<usize> = (0..8).collect();
            perm[1..].shuffle(&mut rng);
            let g = named::from_permutation(&perm);
            if brute_automorphisms(&g).len() == 1 {
                let (_, gens) = canonical_form_by_degree(&g);
                assert!(gens.is_trivial());
                found = true;
                break;
            }
        }
        assert!(found, "no asymmetric cycle permutation graph sampled");
    }

    #[test]
    fn generators_generate_the_full_group_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(11);
        for trial in 0..300 {
            let n = 4 + trial % 7;
            let g = random_subcubic(n, 2 * n, &mut rng);
            let (_, gens) = canonical_form_by_degree(&g);
            let brute: BTreeSet<Vec<u8>> = brute_automorphisms(&g).into_iter().collect();
            assert_eq!(group_closure(n, &gens.gens), brute, "{g:?}");
        }
    }

    #[test]
    fn cert_equality_matches_brute_force_isomorphism() {
        let mut rng = StdRng::seed_from_u64(5);
        for trial in 0..300 {
            let n = 5 + trial % 5;
            let g = random_subcubic(n, 2 * n, &mut rng);
            let h = if trial % 2 == 0 {
                g.relabel(&random_perm(n, &mut rng))
            } else {
                random_subcubic(n, 2 * n, &mut rng)
            };
            // isomorphic iff the disjoint union has an automorphism swapping halves;
            // simpler: brute force over bijections
            let iso = {
                let he = h.edges();
                let mut any = false;
                let mut p: Vec<u8> = (0..n as u8).collect();
                permute_all(&mut p, 0, &mut |p| {
                    if !any && g.size() == h.size() && he.iter().all(|e| g.has_edge(p[e.a as usize] as usize, p[e.b as usize] as usize)) {
                        any = true;
                    }
                });
                any
            };
            assert_eq!(certificate(&g) == certificate(&h), iso);
        }
    }

    fn permute_all(p: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn pair_orbits_examples() {
        let none = AutGenerators::default();
        assert_eq!(pair_orbits(&none, &[(0, 1), (2, 3), (4, 5)]), [0, 1, 2]);

        let p = named::petersen();
        let (_, gens) = canonical_form_by_degree(&p);
        let arcs: Vec<(u8, u8)> = p
            .edges()
            .iter()
            .flat_map(|e| [(e.a, e.b), (e.b, e.a)])
            .collect();
        assert_eq!(arcs.len(), 30);
        assert!(pair_orbits(&gens, &arcs).iter().all(|&o| o == 0));

        let prism = named::prism();
        let (_, gens) = canonical_form_by_degree(&prism);
        let pairs: Vec<(u8, u8)> = prism.edges().iter().map(|e| (e.a, e.b)).collect();
        let orbits = pair_orbits(&gens, &pairs);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            let spoke = (a < 3) != (b < 3);
            let rep = pairs[orbits[i]];
            assert_eq!((rep.0 < 3) != (rep.1 < 3), spoke);
        }
        assert_eq!(orbits.iter().collect::<BTreeSet<_>>().len(), 2);
    }

    #[test]
    fn edge_orbit_labels_examples() {
        let p = named::petersen();
        let (cf, gens) = canonical_form_by_degree(&p);
        let labels: BTreeSet<(u8, u8)> =
            edge_orbit_labels(&p, &cf, &gens).into_iter().map(|(_, l)| l).collect();
        assert_eq!(labels.len(), 1);

        let prism = named::prism();
        let tri = edge_orbit_label(&prism, Edge::new(0, 1));
        let spoke = edge_orbit_label(&prism, Edge::new(0, 3));
        assert_ne!(tri, spoke);
        assert_eq!(tri, edge_orbit_label(&prism, Edge::new(4, 5)));
    }

    #[test]
    fn edge_orbit_label_is_isomorphism_invariant() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..7).collect();
            perm[1..].shuffle(&mut rng);
            let g = named::from_permutation(&perm);
            let phi = random_perm(14, &mut rng);
            let h = g.relabel(&phi);
            for e in g.edges() {
                let f = Edge::new(phi[e.a as usize] as usize, phi[e.b as usize] as usize);
                assert_eq!(edge_orbit_label(&g, e), edge_orbit_label(&h, f));
            }
        }
    }

    #[test]
    fn trivial_group_gives_distinct_edge_labels() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let mut perm: Vec<usize> = (0..8).collect();
            perm[1..].shuffle(&mut rng);
            let g = named::from_permutation(&perm);
            let (cf, gens) = canonical_form_by_degree(&g);
            if gens.is_trivial() {
                let labels: BTreeSet<(u8, u8)> =
                    edge_orbit_labels(&g, &cf, &gens).into_iter().map(|(_, l)| l).collect();
                assert_eq!(labels.len(), g.size());
                return;
            }
        }
        panic!("no asymmetric sample");
    }
}
