use serde::{Deserialize, Serialize};

use super::MaxCyclicCatalog;
use crate::error::Result;
use crate::field::prime_power;
use crate::graph::{DenseGraph, DENSE_CAP};
use crate::group::{GroupHandle, Id};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub order: u32,
    pub prime_power_order: bool,
    /// Number of maximal cyclic subgroups containing the element.
    pub membership: u32,
}

/// A graph on (a subset of) the elements of a group. Vertex `i` is the
/// element `vertices[i]`.
#[derive(Clone, Debug)]
pub struct EpgGraph {
    pub graph: DenseGraph,
    pub vertices: Vec<Id>,
    pub labels: Vec<VertexLabel>,
}

impl EpgGraph {
    fn empty(catalog: &MaxCyclicCatalog, vertices: Vec<Id>, cap: usize) -> Result<Self> {
        let graph = DenseGraph::with_cap(vertices.len(), cap)?;
        let labels = vertices
            .iter()
            .map(|&x| {
                let o = catalog.element_order(x) as u32;
                VertexLabel {
                    order: o,
                    prime_power_order: o == 1 || prime_power(o as u64).is_some(),
                    membership: catalog.membership(x).len() as u32,
                }
            })
            .collect();
        Ok(EpgGraph {
            graph,
            vertices,
            labels,
        })
    }

    /// Index of element `x`, if it is a vertex.
    pub fn vertex_of(&self, x: Id) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    /// Element ids of a list of vertices.
    pub fn elements(&self, vs: &[usize]) -> Vec<Id> {
        vs.iter().map(|&v| self.vertices[v]).collect()
    }
}

/// `E(G)` as the union of cliques on the maximal cyclic subgroups.
pub fn build_enhanced_power_graph(catalog: &MaxCyclicCatalog) -> Result<EpgGraph> {
    let all: Vec<Id> = (0..catalog.group_order() as Id).collect();
    build_enhanced_on(catalog, &all, DENSE_CAP)
}

/// The subgraph of `E(G)` induced on `keep` (sorted element ids).
pub fn build_enhanced_on(catalog: &MaxCyclicCatalog, keep: &[Id], cap: usize) -> Result<EpgGraph> {
    let mut e = EpgGraph::empty(catalog, keep.to_vec(), cap)?;
    for s in catalog.subgroups() {
        let local: Vec<usize> = s
            .members
            .members()
            .iter()
            .filter_map(|&x| e.vertex_of(x))
            .collect();
        e.graph.add_clique(&local);
    }
    Ok(e)
}

/// `P(G)`: `x ~ y` when one is a power of the other.
pub fn build_power_graph(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> Result<EpgGraph> {
    let all: Vec<Id> = g.ids().collect();
    let mut e = EpgGraph::empty(catalog, all, DENSE_CAP)?;
    for x in g.ids() {
        for &y in g.cyclic_subgroup(x).members.members() {
            e.graph.add_edge(x as usize, y as usize);
        }
    }
    Ok(e)
}

/// `E(G)` from the definition, one `⟨x, y⟩` test per pair. Only for small
/// groups; this is the oracle for [`build_enhanced_power_graph`].
pub fn build_enhanced_pairwise(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> Result<EpgGraph> {
    let all: Vec<Id> = g.ids().collect();
    let mut e = EpgGraph::empty(catalog, all, DENSE_CAP)?;
    for x in g.ids() {
        for y in g.ids().filter(|&y| y > x) {
            if g.two_generated_cyclic(x, y).cyclic {
                e.graph.add_edge(x as usize, y as usize);
            }
        }
    }
    Ok(e)
}

/// Whether `P(G) = E(G)`, decided without a dense matrix: every pair inside
/// a maximal cyclic must be power-related.
pub fn power_equals_enhanced(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> bool {
    catalog.subgroups().iter().all(|s| {
        let m = s.members.members();
        m.iter().enumerate().all(|(i, &x)| {
            m[i + 1..]
                .iter()
                .all(|&y| g.one_is_power_of_other(x, y))
        })
    })
}

/// Edge counts of `P(G)` and `E(G)` computed from subgroup data.
pub fn edge_counts(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> (usize, usize) {
    let power: usize = g
        .ids()
        .map(|x| {
            // y ∈ ⟨x⟩, y ≠ x, counted once per unordered pair
            let c = g.cyclic_subgroup(x);
            c.members
                .members()
                .iter()
                .filter(|&&y| y != x && !(g.in_cyclic(x, y) && y < x))
                .count()
        })
        .sum();
    let mut enhanced = 0;
    for x in g.ids() {
        enhanced += catalog.closed_neighbourhood(x).len() - 1;
    }
    (power, enhanced / 2)
}
