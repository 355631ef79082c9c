//! Klee's construction of non-hamiltonian cycle permutation graphs from bad
//! permutations.
//!
//! For a `k`-permutation `π`, `G(π)` has cycles `x_0..x_{k-1}` (vertices
//! `0..k`) and `y_0..y_{k-1}` (vertices `k..2k`) joined by the spokes
//! `x_i y_{π(i)}`. `G'(π)` drops the closing edges `x_{k-1} x_0` and
//! `y_{k-1} y_0`, leaving two paths.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{named, Graph, MAX_ORDER};
use crate::props;

/// A bijection of `{0, .., k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KPermutation {
    img: Vec<usize>,
}

impl KPermutation {
    pub fn new(img: &[usize]) -> Result<Self> {
        let k = img.len();
        if k == 0 {
            return Err(Error::InvalidPermutation("a permutation needs at least one point"));
        }
        let mut seen = alloc::vec![false; k];
        for &x in img {
            if x >= k || seen[x] {
                return Err(Error::InvalidPermutation("not a bijection"));
            }
            seen[x] = true;
        }
        Ok(KPermutation { img: img.to_vec() })
    }

    pub fn identity(k: usize) -> Self {
        KPermutation { img: (0..k).collect() }
    }

    /// The bad 4-permutation obtained from the Petersen graph.
    pub fn petersen() -> Self {
        KPermutation { img: alloc::vec![1, 3, 0, 2] }
    }

    /// The trivial 1-permutation.
    pub fn trivial() -> Self {
        KPermutation::identity(1)
    }

    /// A bad 10-permutation taken from the non-hamiltonian cycle permutation
    /// graph of order 22, which is `i -> 2i + 1 (mod 11)`.
    pub fn order22_seed() -> Self {
        KPermutation { img: alloc::vec![1, 3, 5, 7, 9, 0, 2, 4, 6, 8] }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.img
    }

    /// Drops the last point, which must be fixed.
    pub fn restrict(&self) -> Result<Self> {
        let k = self.img.len();
        if k < 2 || self.img[k - 1] != k - 1 {
            return Err(Error::InvalidPermutation("restriction needs a fixed last point"));
        }
        Ok(KPermutation { img: self.img[..k - 1].to_vec() })
    }

    /// Appends a fixed point.
    pub fn extend_fixing_last(&self) -> Self {
        let mut img = self.img.clone();
        img.push(img.len());
        KPermutation { img }
    }

    /// Block-diagonal concatenation.
    pub fn concat(blocks: &[KPermutation]) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPermutation("nothing to concatenate"));
        }
        let mut img = Vec::new();
        for b in blocks {
            let offset = img.len();
            img.extend(b.img.iter().map(|&x| x + offset));
        }
        Ok(KPermutation { img })
    }

    /// `G(π)`; needs `k >= 3`.
    pub fn graph(&self) -> Result<Graph> {
        let k = self.img.len();
        if k < 3 {
            return Err(Error::InvalidPermutation("G needs k >= 3"));
        }
        if 2 * k > MAX_ORDER {
            return Err(Error::OrderTooLarge(2 * k));
        }
        Ok(named::from_permutation(&self.img))
    }

    /// `G'(π)` on `extra` further isolated vertices.
    fn open_graph(&self, extra: usize) -> Result<Graph> {
        let k = self.img.len();
        if 2 * k + extra > MAX_ORDER {
            return Err(Error::OrderTooLarge(2 * k + extra));
        }
        let mut g = Graph::empty(2 * k + extra);
        for i in 0..k.saturating_sub(1) {
            g.add_edge(i, i + 1);
            g.add_edge(k + i, k + i + 1);
        }
        for (i, &x) in self.img.iter().enumerate() {
            g.add_edge(i, k + x);
        }
        Ok(g)
    }

    /// `G'(π)`.
    pub fn open(&self) -> Result<Graph> {
        self.open_graph(0)
    }

    /// Whether `G'(π)` has neither a hamiltonian path from `{x_0, x_{k-1}}`
    /// to `{y_0, y_{k-1}}` nor a hamiltonian pair of paths `x_i .. y_j`,
    /// `x_{k-1-i} .. y_{k-1-j}`.
    pub fn is_bad(&self) -> Result<bool> {
        let k = self.img.len();
        let ends = if k == 1 { alloc::vec![0] } else { alloc::vec![0, k - 1] };
        // a path a..b is a spanning cycle through a new vertex joined to a, b
        for &i in &ends {
            for &j in &ends {
                let mut g = self.open_graph(1)?;
                g.add_edge(2 * k, i);
                g.add_edge(2 * k, k + j);
                if props::is_hamiltonian(&g) {
                    return Ok(false);
                }
            }
        }
        if k >= 2 {
            // deleting the new vertices from a spanning cycle leaves two paths,
            // each joining an x end to a y end
            let mut g = self.open_graph(2)?;
            let (z1, z2) = (2 * k, 2 * k + 1);
            g.add_edge(z1, 0);
            g.add_edge(z1, k - 1);
            g.add_edge(z2, k);
            g.add_edge(z2, 2 * k - 1);
            if props::is_hamiltonian(&g) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Block lists for `n = 2(k + 1)` from Petersen blocks and pairs of trivial
/// blocks, or the order-22 seed.
pub fn blocks_for_order(n: usize) -> Result<Vec<KPermutation>> {
    if n == 22 {
        return Ok(alloc::vec![KPermutation::order22_seed()]);
    }
    if n < 10 || n % 4 != 2 {
        return Err(Error::UnsupportedOrder(n));
    }
    let p = KPermutation::petersen;
    // n = 8a + 2, or n = 8a + 6 with two separated trivial blocks
    let blocks = if (n - 2) % 8 == 0 {
        (0..(n - 2) / 8).map(|_| p()).collect()
    } else {
        let a = (n - 6) / 8;
        if a < 3 {
            return Err(Error::UnsupportedOrder(n));
        }
        let mut b = alloc::vec![p(), KPermutation::trivial(), p(), KPermutation::trivial()];
        b.extend((2..a).map(|_| p()));
        b
    };
    Ok(blocks)
}

/// Whether a block list meets the hypotheses of the concatenation lemma,
/// given that each nontrivial block is bad.
pub fn blocks_are_admissible(sizes: &[usize]) -> bool {
    let Some((&first, &last)) = sizes.first().zip(sizes.last()) else { return false };
    let ones = sizes.iter().filter(|&&s| s == 1).count();
    first != 1 && last != 1 && ones % 2 == 0 && !sizes.windows(2).any(|w| w[0] == 1 && w[1] == 1)
}

/// A non-hamiltonian cycle permutation graph of order `n`, checked by an
/// exhaustive hamiltonicity search before it is returned.
pub fn construct_nonhamiltonian(n: usize) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let blocks = blocks_for_order(n)?;
    let sizes: Vec<usize> = blocks.iter().map(KPermutation::len).collect();
    debug_assert!(blocks_are_admissible(&sizes));
    let g = KPermutation::concat(&blocks)?.extend_fixing_last().graph()?;
    assert!(!props::is_hamiltonian(&g), "construction produced a hamiltonian graph");
    Ok(g)
}
