use super::{first_one, ones, DenseGraph};
use crate::error::{Error, Result};

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each sorted,
/// in lexicographic order.
pub fn maximal_cliques(g: &DenseGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let p = super::mask_of(n, 0..n);
    let x = vec![0u64; g.stride()];
    let mut r = Vec::new();
    expand(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(g: &DenseGraph, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>, out: &mut Vec<Vec<usize>>) {
    if first_one(&p).is_none() {
        if first_one(&x).is_none() {
            out.push(r.clone());
        }
        return;
    }
    // pivot: the vertex of P ∪ X with most neighbours in P
    let pivot = ones(&p)
        .chain(ones(&x))
        .max_by_key(|&u| {
            g.row(u)
                .iter()
                .zip(&p)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .unwrap();
    let cand: Vec<usize> = {
        let pr = g.row(pivot);
        let m: Vec<u64> = p.iter().zip(pr).map(|(a, b)| a & !b).collect();
        ones(&m).collect()
    };
    for v in cand {
        let rv = g.row(v);
        let np: Vec<u64> = p.iter().zip(rv).map(|(a, b)| a & b).collect();
        let nx: Vec<u64> = x.iter().zip(rv).map(|(a, b)| a & b).collect();
        r.push(v);
        expand(g, r, np, nx, out);
        r.pop();
        super::clear_bit(&mut p, v);
        super::set_bit(&mut x, v);
    }
}

/// Exact independence number by branch and bound, for at most 64 vertices.
pub fn independence_number(g: &DenseGraph) -> Result<usize> {
    let n = g.n();
    if n > 64 {
        return Err(Error::GraphTooLarge { vertices: n, cap: 64 });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v).first().copied().unwrap_or(0)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    branch(&adj, all, 0, &mut best);
    Ok(best)
}

fn branch(adj: &[u64], p: u64, size: usize, best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + p.count_ones() as usize <= *best {
        return;
    }
    // vertices with no neighbour left in P can always be taken
    let mut free = 0u64;
    let mut w = p;
    while w != 0 {
        let v = w.trailing_zeros() as usize;
        w &= w - 1;
        if adj[v] & p == 0 {
            free |= 1 << v;
        }
    }
    if free != 0 {
        branch(adj, p & !free, size + free.count_ones() as usize, best);
        return;
    }
    let mut v = 0;
    let mut deg = 0;
    let mut w = p;
    while w != 0 {
        let u = w.trailing_zeros() as usize;
        w &= w - 1;
        let d = (adj[u] & p).count_ones();
        if d > deg {
            deg = d;
            v = u;
        }
    }
    branch(adj, p & !adj[v] & !(1 << v), size + 1, best);
    branch(adj, p & !(1 << v), size, best);
}
