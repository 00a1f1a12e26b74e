use super::{bit, ones, words, DenseGraph, Witness};

/// An induced 4-cycle, if any.
///
/// Universal vertices never lie on an induced `C4` and are skipped. For the
/// rest, only pairs `u < v` at distance exactly two can be opposite corners,
/// so each `u` scans the second neighbourhood gathered from its neighbours'
/// rows and looks for two non-adjacent common neighbours.
pub fn has_induced_c4(g: &DenseGraph) -> Option<Witness> {
    let n = g.n();
    let nw = words(n);
    let mut live = vec![0u64; nw];
    for v in 0..n {
        if g.degree(v) + 1 != n {
            super::set_bit(&mut live, v);
        }
    }
    let mut second = vec![0u64; nw];
    let mut common = vec![0u64; nw];
    for u in ones(&live) {
        let ru = g.row(u);
        second.iter_mut().for_each(|w| *w = 0);
        for a in ones(ru) {
            if !bit(&live, a) {
                continue;
            }
            for (s, r) in second.iter_mut().zip(g.row(a)) {
                *s |= r;
            }
        }
        for k in 0..nw {
            second[k] &= live[k] & !ru[k];
        }
        for v in ones(&second).filter(|&v| v > u) {
            let rv = g.row(v);
            for k in 0..nw {
                common[k] = ru[k] & rv[k] & live[k];
            }
            if let Some((a, b)) = g.non_adjacent_pair(&common) {
                return Some(Witness::C4([u, a, v, b]));
            }
        }
    }
    None
}

/// A diamond `{a, u, v, b}` with `a, b` non-adjacent, found as two
/// non-adjacent common neighbours of an edge `{u, v}`.
pub fn is_diamond_free(g: &DenseGraph) -> Option<Witness> {
    let nw = words(g.n());
    let mut common = vec![0u64; nw];
    for (u, v) in g.edges() {
        let (ru, rv) = (g.row(u), g.row(v));
        for k in 0..nw {
            common[k] = ru[k] & rv[k];
        }
        if let Some((a, b)) = g.non_adjacent_pair(&common) {
            return Some(Witness::Diamond([a, u, v, b]));
        }
    }
    None
}

/// Two edges with no edges between them.
pub fn find_2k2(g: &DenseGraph) -> Option<Witness> {
    let nw = words(g.n());
    let mut far = vec![0u64; nw];
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(a, b) in &edges {
        let (ra, rb) = (g.row(a), g.row(b));
        for k in 0..nw {
            far[k] = !(ra[k] | rb[k]);
        }
        super::clear_bit(&mut far, a);
        super::clear_bit(&mut far, b);
        for c in ones(&far).filter(|&c| c < g.n()) {
            let rc = g.row(c);
            if let Some(d) = ones(rc).find(|&d| bit(&far, d)) {
                return Some(Witness::TwoK2([a, b, c, d]));
            }
        }
    }
    None
}
