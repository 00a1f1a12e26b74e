use std::collections::BTreeSet;

use super::{bit, DenseGraph};

/// For every edge `{x, y}`, `N[x] ⊆ N[y]` or `N[y] ⊆ N[x]`.
pub fn is_quasi_threshold(g: &DenseGraph) -> bool {
    g.edges().all(|(x, y)| {
        let (rx, ry) = (g.row(x), g.row(y));
        // with x ~ y, N[x] ⊆ N[y] reduces to N(x) - y ⊆ N(y) + y
        let sub = |a: &[u64], b: &[u64], skip: usize| {
            a.iter().zip(b).enumerate().all(|(k, (&p, &q))| {
                let mut extra = p & !q;
                if k == skip / 64 {
                    extra &= !(1 << (skip % 64));
                }
                extra == 0
            })
        };
        sub(rx, ry, y) || sub(ry, rx, x)
    })
}

/// Peels isolated or dominating vertices until nothing is left.
pub fn is_threshold(g: &DenseGraph) -> bool {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut gone = vec![0u64; super::words(n)];
    while let Some(&(d_min, v_min)) = alive.first() {
        let &(d_max, v_max) = alive.last().unwrap();
        let v = if d_min == 0 {
            v_min
        } else if d_max + 1 == alive.len() {
            v_max
        } else {
            return false;
        };
        alive.remove(&(deg[v], v));
        super::set_bit(&mut gone, v);
        for w in g.neighbors(v) {
            if !bit(&gone, w) {
                alive.remove(&(deg[w], w));
                deg[w] -= 1;
                alive.insert((deg[w], w));
            }
        }
    }
    true
}
