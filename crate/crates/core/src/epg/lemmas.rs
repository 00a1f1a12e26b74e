//! Structural facts about induced paths, holes and triangles, checked on
//! concrete witnesses.

use serde::{Deserialize, Serialize};

use super::MaxCyclicCatalog;
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Id};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Path,
    Cycle,
}

/// One flag per clause, in order (i) to (vii).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralLemmaReport {
    pub shape: Shape,
    pub clauses: [bool; 7],
}

impl GeneralLemmaReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|&c| c)
    }

    /// Labels of failing clauses.
    pub fn failures(&self) -> Vec<&'static str> {
        const NAMES: [&str; 7] = ["i", "ii", "iii", "iv", "v", "vi", "vii"];
        NAMES
            .iter()
            .zip(self.clauses)
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| *n)
            .collect()
    }
}

fn adjacent(g: &GroupHandle, x: Id, y: Id) -> bool {
    x != y && g.two_generated_cyclic(x, y).cyclic
}

/// Whether `xs` is an induced path or cycle, from the definition.
pub fn is_induced(g: &GroupHandle, xs: &[Id], shape: Shape) -> bool {
    let n = xs.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let consecutive = j == i + 1 || (shape == Shape::Cycle && i == 0 && j == n - 1);
            xs[i] != xs[j] && adjacent(g, xs[i], xs[j]) == consecutive
        })
    })
}

pub fn validate_general_lemma(
    g: &GroupHandle,
    catalog: &MaxCyclicCatalog,
    xs: &[Id],
    shape: Shape,
) -> Result<GeneralLemmaReport> {
    let n = xs.len();
    if n < 4 {
        return Err(Error::InvalidWitness(format!("{n} vertices, need at least 4")));
    }
    if !is_induced(g, xs, shape) {
        return Err(Error::InvalidWitness("not an induced path or cycle".into()));
    }
    let interior = |i: usize| shape == Shape::Cycle || (i != 0 && i != n - 1);
    // edges away from the ends of a path, every edge of a cycle
    let inner_edges: Vec<(Id, Id)> = match shape {
        Shape::Path => (1..n - 2).map(|i| (xs[i], xs[i + 1])).collect(),
        Shape::Cycle => (0..n).map(|i| (xs[i], xs[(i + 1) % n])).collect(),
    };

    let mut pair_cyclics = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let t = g.two_generated_cyclic(xs[i], xs[j]);
            if let Some(gen) = t.generator {
                pair_cyclics.push(g.cyclic_index(gen));
            }
        }
    }
    let distinct = |v: &mut Vec<usize>| {
        let k = v.len();
        v.sort_unstable();
        v.dedup();
        v.len() == k
    };
    let i = distinct(&mut pair_cyclics);
    let ii = distinct(&mut xs.iter().map(|&x| g.cyclic_index(x)).collect());
    let iii = xs.iter().all(|&x| !catalog.cyc().contains(x));
    let iv = (0..n).all(|k| !interior(k) || !catalog.simplicial().contains(xs[k]));
    let v = (0..n).all(|k| !interior(k) || catalog.membership(xs[k]).len() >= 2);
    let vi = inner_edges.iter().all(|&(x, y)| !g.one_is_power_of_other(x, y));
    let vii = inner_edges.iter().all(|&(x, y)| {
        let (a, b) = (g.element_order(x), g.element_order(y));
        a % b != 0 && b % a != 0
    });
    Ok(GeneralLemmaReport {
        shape,
        clauses: [i, ii, iii, iv, v, vi, vii],
    })
}

/// The middle edge of an induced 4-path is never a power-graph edge.
pub fn middle_edge_not_power(g: &GroupHandle, p4: [Id; 4]) -> bool {
    !g.one_is_power_of_other(p4[1], p4[2])
}

/// Pairwise cyclic triples generate a cyclic group.
pub fn triangle_is_cyclic(g: &GroupHandle, x: Id, y: Id, z: Id) -> bool {
    match g.two_generated_cyclic(x, y).generator {
        Some(w) => g.two_generated_cyclic(w, z).cyclic,
        None => false,
    }
}
