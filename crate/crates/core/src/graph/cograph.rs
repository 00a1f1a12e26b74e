use serde::{Deserialize, Serialize};

use super::{bit, clear_bit, first_one, mask_of, ones, words, Certified, DenseGraph, Witness, W};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cotree {
    Leaf(usize),
    /// Disjoint union of the children.
    Union(Vec<Cotree>),
    /// Every vertex of one child is adjacent to every vertex of another.
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().for_each(|c| c.collect(out)),
        }
    }

    /// The graph the cotree denotes, on `n` vertices.
    pub fn evaluate(&self, n: usize) -> DenseGraph {
        let mut g = DenseGraph::with_cap(n, usize::MAX).unwrap();
        self.add_edges(&mut g);
        g
    }

    fn add_edges(&self, g: &mut DenseGraph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(cs) => cs.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(cs) => {
                let parts: Vec<Vec<usize>> = cs.iter().map(|c| c.leaves()).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.add_edge(u, v);
                            }
                        }
                    }
                }
                cs.iter().for_each(|c| c.add_edges(g));
            }
        }
    }
}

/// Cotree of `g`, or an induced `P4`.
///
/// A graph on at least two vertices is a cograph iff every induced subgraph
/// is disconnected or has a disconnected complement, so the recursion splits
/// on components or co-components until it meets a part that is neither.
pub fn is_cograph(g: &DenseGraph) -> Certified<Cotree> {
    if g.n() == 0 {
        return Certified::Member(Cotree::Union(Vec::new()));
    }
    match decompose(g, mask_of(g.n(), 0..g.n())) {
        Ok(t) => Certified::Member(t),
        Err(p) => Certified::Witness(Witness::P4(p)),
    }
}

fn decompose(g: &DenseGraph, set: Vec<u64>) -> Result<Cotree, [usize; 4]> {
    let first = first_one(&set).expect("nonempty part");
    if super::count(&set) == 1 {
        return Ok(Cotree::Leaf(first));
    }
    let parts = components(g, &set, false);
    if parts.len() > 1 {
        return parts
            .into_iter()
            .map(|p| decompose(g, p))
            .collect::<Result<_, _>>()
            .map(Cotree::Union);
    }
    let parts = components(g, &set, true);
    if parts.len() > 1 {
        return parts
            .into_iter()
            .map(|p| decompose(g, p))
            .collect::<Result<_, _>>()
            .map(Cotree::Join);
    }
    Err(p4_in_prime_part(g, &set).expect("connected, co-connected graph contains a P4"))
}

/// Components of `g[set]`, or of its complement. The complement is never
/// built: the search keeps the unvisited vertices as a bitset and steps to
/// all of them that are (non-)adjacent at once.
fn components(g: &DenseGraph, set: &[u64], complement: bool) -> Vec<Vec<u64>> {
    let mut unvisited = set.to_vec();
    let mut out = Vec::new();
    while let Some(s) = first_one(&unvisited) {
        let mut comp = vec![0u64; set.len()];
        let mut stack = vec![s];
        clear_bit(&mut unvisited, s);
        super::set_bit(&mut comp, s);
        while let Some(v) = stack.pop() {
            let row = g.row(v);
            for k in 0..unvisited.len() {
                let step = if complement {
                    unvisited[k] & !row[k]
                } else {
                    unvisited[k] & row[k]
                };
                if step != 0 {
                    unvisited[k] &= !step;
                    comp[k] |= step;
                    let mut w = step;
                    while w != 0 {
                        stack.push(k * W + w.trailing_zeros() as usize);
                        w &= w - 1;
                    }
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Finds `a - u - v - b` by trying each edge `{u, v}` of `g[set]` as the
/// middle edge: `a` must see `u` but not `v`, `b` the reverse, and `a, b`
/// must be non-adjacent.
fn p4_in_prime_part(g: &DenseGraph, set: &[u64]) -> Option<[usize; 4]> {
    let nw = words(g.n());
    let mut only_u = vec![0u64; nw];
    let mut only_v = vec![0u64; nw];
    for u in ones(set) {
        let ru = g.row(u);
        for v in ones(ru).filter(|&v| v > u && bit(set, v)) {
            let rv = g.row(v);
            let mut any_u = false;
            let mut any_v = false;
            for k in 0..nw {
                only_u[k] = set[k] & ru[k] & !rv[k];
                only_v[k] = set[k] & rv[k] & !ru[k];
                any_u |= only_u[k] != 0;
                any_v |= only_v[k] != 0;
            }
            clear_bit(&mut only_u, v);
            clear_bit(&mut only_v, u);
            if !any_u || !any_v {
                continue;
            }
            for a in ones(&only_u) {
                let ra = g.row(a);
                if let Some(b) = only_v
                    .iter()
                    .zip(ra)
                    .enumerate()
                    .find(|(_, (&o, &r))| o & !r != 0)
                    .map(|(k, (&o, &r))| k * W + (o & !r).trailing_zeros() as usize)
                {
                    return Some([a, u, v, b]);
                }
            }
        }
    }
    None
}
