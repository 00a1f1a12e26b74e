//! Undirected graphs on `0..n` with bitset adjacency rows, and recognisers
//! for the hereditary classes between threshold and chordal graphs. Every
//! negative answer comes with a small induced subgraph that can be checked
//! against the adjacency matrix.

mod blocks;
mod chordal;
mod cliques;
mod cograph;
mod forbidden;
mod threshold;

pub use blocks::{blocks, is_block_graph, BlockDecomposition};
pub use chordal::{find_hole, is_chordal, lex_bfs, Peo};
pub use cliques::{independence_number, maximal_cliques};
pub use cograph::{is_cograph, Cotree};
pub use forbidden::{find_2k2, has_induced_c4, is_diamond_free};
pub use threshold::{is_quasi_threshold, is_threshold};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count [`DenseGraph::new`] accepts by default.
pub const DENSE_CAP: usize = 20_000;

pub(crate) const W: usize = 64;

#[inline]
pub(crate) fn words(n: usize) -> usize {
    n.div_ceil(W)
}

#[inline]
pub(crate) fn bit(row: &[u64], i: usize) -> bool {
    row[i / W] >> (i % W) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / W] |= 1 << (i % W);
}

#[inline]
pub(crate) fn clear_bit(row: &mut [u64], i: usize) {
    row[i / W] &= !(1 << (i % W));
}

/// Ones of a bitset, ascending.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(k * W + t)
        })
    })
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn first_one(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * W + w.trailing_zeros() as usize)
}

/// Bitset with the given vertices set.
pub(crate) fn mask_of(n: usize, vs: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut m = vec![0u64; words(n)];
    for v in vs {
        set_bit(&mut m, v);
    }
    m
}

#[derive(Clone, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DenseGraph(n={}, m={})", self.n, self.edge_count())
    }
}

impl DenseGraph {
    /// Empty graph on `n` vertices; fails above [`DENSE_CAP`].
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DENSE_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::GraphTooLarge { vertices: n, cap });
        }
        let stride = words(n);
        Ok(DenseGraph {
            n,
            stride,
            bits: vec![0; n * stride],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        let s = self.stride;
        set_bit(&mut self.bits[u * s..(u + 1) * s], v);
        set_bit(&mut self.bits[v * s..(v + 1) * s], u);
    }

    /// Adds every edge inside `vs`.
    pub fn add_clique(&mut self, vs: &[usize]) {
        let mask = mask_of(self.n, vs.iter().copied());
        let s = self.stride;
        for &v in vs {
            let row = &mut self.bits[v * s..(v + 1) * s];
            for (r, m) in row.iter_mut().zip(&mask) {
                *r |= m;
            }
            clear_bit(row, v);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bit(self.row(u), v)
    }

    /// Open neighbourhood of `v` as a bitset.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Closed neighbourhood of `v` as a bitset.
    pub fn closed_row(&self, v: usize) -> Vec<u64> {
        let mut r = self.row(v).to_vec();
        set_bit(&mut r, v);
        r
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        count(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Subgraph induced on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> DenseGraph {
        let mut g = DenseGraph::with_cap(vs.len(), usize::MAX).unwrap();
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices adjacent to all others.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    /// Vertices whose neighbourhood is a clique.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_clique_set(self.row(v))).collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether the vertices of a bitset are pairwise adjacent.
    pub(crate) fn is_clique_set(&self, set: &[u64]) -> bool {
        ones(set).all(|u| {
            set.iter()
                .zip(self.row(u))
                .enumerate()
                .all(|(k, (&s, &r))| {
                    let mut need = s;
                    if k == u / W {
                        need &= !(1 << (u % W));
                    }
                    need & !r == 0
                })
        })
    }

    /// Two vertices of `set` that are distinct and non-adjacent.
    pub(crate) fn non_adjacent_pair(&self, set: &[u64]) -> Option<(usize, usize)> {
        for a in ones(set) {
            let row = self.row(a);
            for (k, (&s, &r)) in set.iter().zip(row).enumerate() {
                let mut cand = s & !r;
                if k == a / W {
                    cand &= !(1 << (a % W));
                }
                if cand != 0 {
                    return Some((a, k * W + cand.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    /// Pairs of distinct vertices with equal closed neighbourhoods.
    pub fn closed_twins(&self) -> Vec<(usize, usize)> {
        let mut classes: rustc_hash::FxHashMap<Vec<u64>, Vec<usize>> = Default::default();
        for v in 0..self.n {
            classes.entry(self.closed_row(v)).or_default().push(v);
        }
        let mut out = Vec::new();
        for vs in classes.values() {
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// An induced subgraph proving non-membership in a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Witness {
    /// Path `v0 - v1 - v2 - v3`.
    P4([usize; 4]),
    /// Induced cycle of length at least 4, in cyclic order.
    Hole(Vec<usize>),
    /// Induced 4-cycle `v0 - v1 - v2 - v3 - v0`.
    C4([usize; 4]),
    /// `K4` minus the edge `{v0, v3}`.
    Diamond([usize; 4]),
    /// Edges `{v0, v1}` and `{v2, v3}` with nothing between them.
    TwoK2([usize; 4]),
}

impl Witness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Witness::P4(v) | Witness::C4(v) | Witness::Diamond(v) | Witness::TwoK2(v) => v,
            Witness::Hole(v) => v,
        }
    }

    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &DenseGraph) -> bool {
        let vs = self.vertices();
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let k = vs.len();
        let want = |i: usize, j: usize| -> bool {
            match self {
                Witness::P4(_) => j == i + 1,
                Witness::Hole(_) | Witness::C4(_) => j == i + 1 || (i == 0 && j == k - 1),
                Witness::Diamond(_) => !(i == 0 && j == 3),
                Witness::TwoK2(_) => (i, j) == (0, 1) || (i, j) == (2, 3),
            }
        };
        if matches!(self, Witness::Hole(_)) && k < 4 {
            return false;
        }
        (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(vs[i], vs[j]) == want(i, j)))
    }
}

/// Outcome of a recogniser: a certificate of membership or a witness
/// against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certified<C> {
    Member(C),
    Witness(Witness),
}

impl<C> Certified<C> {
    pub fn is_member(&self) -> bool {
        matches!(self, Certified::Member(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Certified::Witness(w) => Some(w),
            Certified::Member(_) => None,
        }
    }
}

#[cfg(test)]
mod tests;
