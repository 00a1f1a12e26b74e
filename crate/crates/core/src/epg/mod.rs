//! Enhanced power graph machinery: the maximal cyclic catalog, graph
//! builders, and the group-theoretic decision criteria.

mod ab;
mod build;
mod catalog;
mod criteria;
mod lemmas;
mod reductions;

pub use ab::{ab_to_c4, c4_to_ab, c4_witness_search, is_induced_c4, ABConfiguration};
pub use build::{
    build_enhanced_on, build_enhanced_pairwise, build_enhanced_power_graph, build_power_graph,
    edge_counts, power_equals_enhanced, EpgGraph, VertexLabel,
};
pub use catalog::{Intersections, MaxCyclicCatalog};
pub use criteria::{
    clique_number, cograph_by_chains, intersection_orders, is_eppo, is_nilpotent,
    nilpotent_conditions, partition_by_cyclics, partition_equivalents, prime_intersection_check,
    primes_of, w_triple, w_triple_naive, w_triple_with_sizes, NilpotentReport, PartitionOutcome,
    PartitionReport, WTriple,
};
pub use lemmas::{
    is_induced, middle_edge_not_power, triangle_is_cyclic, validate_general_lemma,
    GeneralLemmaReport, Shape,
};
pub use reductions::{
    cyc_translation_invariance, quotient_by_cyc, quotient_edge_transfer, reductions,
    residual_graph, QuotientRoute, Reduction, ReductionTarget,
};
