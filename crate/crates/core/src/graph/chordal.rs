use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{bit, mask_of, ones, set_bit, words, Certified, DenseGraph, Witness};

/// A perfect elimination ordering: each vertex's later neighbours form a
/// clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peo {
    pub order: Vec<usize>,
}

impl Peo {
    pub fn verify(&self, g: &DenseGraph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut later = vec![0u64; words(n)];
        for &v in self.order.iter().rev() {
            let l: Vec<u64> = g.row(v).iter().zip(&later).map(|(a, b)| a & b).collect();
            if !g.is_clique_set(&l) {
                return false;
            }
            set_bit(&mut later, v);
        }
        true
    }
}

/// Lexicographic breadth-first search by partition refinement. Classes are
/// contiguous ranges of one array, so their order is the array order and
/// splitting a class puts the new part directly in front of it.
pub fn lex_bfs(g: &DenseGraph) -> Vec<usize> {
    let n = g.n();
    let mut seq: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut class_of = vec![0usize; n];
    // (start, end, split target for the current round)
    let mut classes: Vec<(usize, usize, usize)> = vec![(0, n, usize::MAX)];
    let mut touched = Vec::new();
    for i in 0..n {
        let v = seq[i];
        let c = class_of[v];
        classes[c].0 += 1;
        for w in g.neighbors(v) {
            if pos[w] <= i {
                continue;
            }
            let c = class_of[w];
            if classes[c].2 == usize::MAX {
                let s = classes[c].0;
                classes.push((s, s, usize::MAX));
                classes[c].2 = classes.len() - 1;
                touched.push(c);
            }
            let nc = classes[c].2;
            let front = classes[c].0;
            let u = seq[front];
            seq.swap(front, pos[w]);
            pos[u] = pos[w];
            pos[w] = front;
            classes[c].0 += 1;
            classes[nc].1 += 1;
            class_of[w] = nc;
        }
        for c in touched.drain(..) {
            classes[c].2 = usize::MAX;
        }
    }
    seq
}

/// A perfect elimination ordering (reverse Lex-BFS), or an induced cycle of
/// length at least 4.
pub fn is_chordal(g: &DenseGraph) -> Certified<Peo> {
    let visit = lex_bfs(g);
    let n = g.n();
    let mut rank = vec![0usize; n];
    for (i, &v) in visit.iter().enumerate() {
        rank[v] = i;
    }
    // Walking the visit order forwards is walking the elimination order
    // backwards, so `earlier` holds exactly the later-eliminated vertices.
    let mut earlier = vec![0u64; words(n)];
    for &v in &visit {
        let l: Vec<u64> = g.row(v).iter().zip(&earlier).map(|(a, b)| a & b).collect();
        if let Some(p) = ones(&l).max_by_key(|&u| rank[u]) {
            let rp = g.row(p);
            let bad = ones(&l).find(|&w| w != p && !bit(rp, w));
            if let Some(w) = bad {
                let hole = hole_through(g, v, p, w)
                    .or_else(|| find_hole(g))
                    .expect("non-chordal graph has a hole");
                return Certified::Witness(Witness::Hole(hole));
            }
        }
        set_bit(&mut earlier, v);
    }
    let mut order = visit;
    order.reverse();
    Certified::Member(Peo { order })
}

/// Shortest `a`-`b` path whose inner vertices lie in `allowed`.
fn shortest_path(g: &DenseGraph, a: usize, b: usize, allowed: &[u64]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if prev[y] != usize::MAX {
                continue;
            }
            if y == b {
                if x == a {
                    continue;
                }
                prev[y] = x;
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if bit(allowed, y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Hole `v, a, ..., b` for non-adjacent neighbours `a, b` of `v`, routed
/// outside the closed neighbourhood of `v`.
fn hole_through(g: &DenseGraph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut allowed: Vec<u64> = g.row(v).iter().map(|w| !w).collect();
    super::clear_bit(&mut allowed, v);
    let path = shortest_path(g, a, b, &allowed)?;
    let mut hole = vec![v];
    hole.extend(path);
    Some(hole)
}

/// Exhaustive hole search. For each `v`, the components of `G - N[v]` are
/// examined; a component attached to two non-adjacent neighbours of `v`
/// closes a hole through `v`. Every hole is found this way from any of its
/// vertices.
pub fn find_hole(g: &DenseGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let nw = words(n);
    for v in 0..n {
        let mut rest: Vec<u64> = mask_of(n, 0..n);
        for (r, w) in rest.iter_mut().zip(g.row(v)) {
            *r &= !w;
        }
        super::clear_bit(&mut rest, v);
        while let Some(s) = super::first_one(&rest) {
            let mut comp = vec![0u64; nw];
            let mut reach = vec![0u64; nw];
            let mut stack = vec![s];
            super::clear_bit(&mut rest, s);
            set_bit(&mut comp, s);
            while let Some(x) = stack.pop() {
                let row = g.row(x);
                for k in 0..nw {
                    reach[k] |= row[k];
                    let step = rest[k] & row[k];
                    if step != 0 {
                        rest[k] &= !step;
                        comp[k] |= step;
                        stack.extend(ones(&[step]).map(|t| k * 64 + t));
                    }
                }
            }
            let attach: Vec<u64> = reach.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            if let Some((a, b)) = g.non_adjacent_pair(&attach) {
                let path = shortest_path(g, a, b, &comp).expect("component joins a and b");
                let mut hole = vec![v];
                hole.extend(path);
                return Some(hole);
            }
        }
    }
    None
}
