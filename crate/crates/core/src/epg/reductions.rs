use serde::{Deserialize, Serialize};

use super::{build_enhanced_on, EpgGraph, MaxCyclicCatalog};
use crate::error::Result;
use crate::group::{GroupHandle, Id};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionTarget {
    Chordal,
    C4Free,
    Cograph,
}

/// Vertices that can be deleted without changing the answer for `target`,
/// and what is left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub target: ReductionTarget,
    pub removed: Vec<Id>,
    pub residual: Vec<Id>,
}

/// Star vertices never lie on an induced path or hole, and neither do
/// simplicial vertices on a hole; so `Cyc(G)` can go for every target and
/// `sl` as well for the cycle targets.
pub fn reductions(catalog: &MaxCyclicCatalog, target: ReductionTarget) -> Reduction {
    let n = catalog.group_order() as Id;
    let drop = |x: Id| {
        catalog.cyc().contains(x)
            || (target != ReductionTarget::Cograph && catalog.simplicial().contains(x))
    };
    let (removed, residual) = (0..n).partition(|&x| drop(x));
    Reduction {
        target,
        removed,
        residual,
    }
}

pub fn residual_graph(catalog: &MaxCyclicCatalog, r: &Reduction, cap: usize) -> Result<EpgGraph> {
    build_enhanced_on(catalog, &r.residual, cap)
}

/// `G / Cyc(G)` with its own catalog.
#[derive(Debug)]
pub struct QuotientRoute {
    pub quotient: GroupHandle,
    /// Element of `G` to its coset.
    pub projection: Vec<Id>,
    pub catalog: MaxCyclicCatalog,
}

pub fn quotient_by_cyc(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> Result<QuotientRoute> {
    let (quotient, projection) = g.quotient(catalog.cyc())?;
    let qc = MaxCyclicCatalog::new(&quotient);
    Ok(QuotientRoute {
        quotient,
        projection,
        catalog: qc,
    })
}

/// First pair in distinct cosets whose adjacency differs between `E(G)` and
/// `E(G / Cyc(G))`.
pub fn quotient_edge_transfer(catalog: &MaxCyclicCatalog, route: &QuotientRoute) -> Option<(Id, Id)> {
    let n = catalog.group_order() as Id;
    let pr = &route.projection;
    for x in 0..n {
        for y in x + 1..n {
            let (px, py) = (pr[x as usize], pr[y as usize]);
            if px != py && catalog.adjacent(x, y) != route.catalog.adjacent(px, py) {
                return Some((x, y));
            }
        }
    }
    None
}

/// First `(g, h, c1, c2)` for which `<g, h>` and `<g c1, h c2>` disagree
/// on being cyclic, with `c1, c2` in `Cyc(G)`.
pub fn cyc_translation_invariance(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> Option<[Id; 4]> {
    let cyc = catalog.cyc().members();
    for x in g.ids() {
        for y in g.ids().filter(|&y| y > x) {
            let base = catalog.adjacent(x, y);
            for &c1 in cyc {
                for &c2 in cyc {
                    let (u, v) = (g.mul(x, c1), g.mul(y, c2));
                    let t = u == v || g.two_generated_cyclic(u, v).cyclic;
                    if t != base {
                        return Some([x, y, c1, c2]);
                    }
                }
            }
        }
    }
    None
}
