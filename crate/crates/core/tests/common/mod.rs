//! Exhaustive induced-subgraph enumeration, used as the oracle for the
//! graph recognisers.
#![allow(dead_code)]

use epg::graph::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng) -> DenseGraph {
    let n = rng.random_range(1..=12);
    let p: f64 = rng.random_range(0.1..0.9);
    let mut g = DenseGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn degrees(g: &DenseGraph, s: &[usize]) -> Vec<usize> {
    s.iter()
        .map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count())
        .collect()
}

pub fn edges_in(g: &DenseGraph, s: &[usize]) -> usize {
    degrees(g, s).iter().sum::<usize>() / 2
}

pub fn connected(g: &DenseGraph, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in s {
            if g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

pub fn has_p4(g: &DenseGraph) -> bool {
    subsets(g.n(), 4).iter().any(|s| {
        let mut d = degrees(g, s);
        d.sort();
        d == [1, 1, 2, 2] && edges_in(g, s) == 3 && connected(g, s)
    })
}

pub fn has_hole(g: &DenseGraph) -> bool {
    (4..=g.n()).any(|k| {
        subsets(g.n(), k)
            .iter()
            .any(|s| degrees(g, s).iter().all(|&d| d == 2) && connected(g, s))
    })
}

pub fn has_c4(g: &DenseGraph) -> bool {
    subsets(g.n(), 4)
        .iter()
        .any(|s| degrees(g, s).iter().all(|&d| d == 2))
}

pub fn has_diamond(g: &DenseGraph) -> bool {
    subsets(g.n(), 4).iter().any(|s| edges_in(g, s) == 5)
}

pub fn has_2k2(g: &DenseGraph) -> bool {
    subsets(g.n(), 4)
        .iter()
        .any(|s| edges_in(g, s) == 2 && degrees(g, s).iter().all(|&d| d == 1))
}

pub fn brute_cliques(g: &DenseGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for m in 1u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
        if !g.is_clique(&s) {
            continue;
        }
        let maximal = (0..n)
            .filter(|v| !s.contains(v))
            .all(|v| s.iter().any(|&u| !g.has_edge(u, v)));
        if maximal {
            out.push(s);
        }
    }
    out.sort();
    out
}

pub fn brute_alpha(g: &DenseGraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|u| (u + 1..n).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || !g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Every recogniser's verdict against brute force. Returns the first
/// mismatch.
pub fn compare_with_exhaustive(g: &DenseGraph) -> Result<(), &'static str> {
    let (p4, hole, c4, diamond, two) = (has_p4(g), has_hole(g), has_c4(g), has_diamond(g), has_2k2(g));
    let checks = [
        ("cograph", is_cograph(g).is_member() == !p4),
        ("chordal", is_chordal(g).is_member() == !hole),
        ("c4", has_induced_c4(g).is_some() == c4),
        ("diamond", is_diamond_free(g).is_some() == diamond),
        ("2k2", find_2k2(g).is_some() == two),
        ("block", is_block_graph(g) == (!hole && !diamond)),
        ("quasi-threshold", is_quasi_threshold(g) == (!p4 && !hole)),
        ("threshold", is_threshold(g) == (!p4 && !c4 && !two)),
        ("cliques", maximal_cliques(g) == brute_cliques(g)),
        ("independence", independence_number(g).ok() == Some(brute_alpha(g))),
    ];
    match checks.iter().find(|c| !c.1) {
        Some((name, _)) => Err(name),
        None => Ok(()),
    }
}
