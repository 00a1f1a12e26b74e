use epg::epg::*;
use epg::expr::parse;
use epg::graph::{independence_number, is_cograph, maximal_cliques, DENSE_CAP};
use epg::group::{GroupHandle, Id, DEFAULT_CAP};
use epg::zoo::{build_named, k_a7};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn both(s: &str) -> (GroupHandle, MaxCyclicCatalog) {
    let g = build_named(&parse(s).unwrap(), DEFAULT_CAP).unwrap().group;
    let c = MaxCyclicCatalog::new(&g);
    (g, c)
}

fn cyclic_closure(g: &GroupHandle, xs: &[Id]) -> bool {
    let h = g.subgroup_closure(xs);
    h.members().iter().any(|&z| g.element_order(z) == h.len())
}

#[test]
fn independence_equals_clique_count_on_cograph_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tested = 0;
    for s in ["Q8", "D8", "S3", "A4", "E2^3", "C4 x C2 x C3", "Q8 x C3", "D8 x C5", "E3^2 x C2", "C2 x Q8", "D10 x C3"] {
        let (g, c) = both(s);
        assert!(g.order() <= 64);
        let e = build_enhanced_power_graph(&c).unwrap();
        if !is_cograph(&e.graph).is_member() {
            continue;
        }
        let ids: Vec<usize> = (0..g.order()).collect();
        for _ in 0..50 {
            let k = rng.random_range(1..=ids.len().min(40));
            let mut pick: Vec<usize> = ids.choose_multiple(&mut rng, k).copied().collect();
            pick.sort_unstable();
            let sub = e.graph.induced_subgraph(&pick);
            assert_eq!(
                independence_number(&sub).unwrap(),
                maximal_cliques(&sub).len(),
                "{s} on {pick:?}"
            );
        }
        tested += 1;
    }
    assert!(tested >= 8);
}

#[test]
fn random_triangles_generate_cyclic_subgroups() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let groups: Vec<_> = ["S5", "A4 x S3", "SL(2,3) x Q8", "PSL(2,7)"].iter().map(|s| both(s)).collect();
    let mut found = 0;
    while found < 1000 {
        let (g, c) = groups.choose(&mut rng).unwrap();
        let x = rng.random_range(0..g.order() as Id);
        let mut nx = c.closed_neighbourhood(x);
        nx.retain(|&y| y != x);
        let Some(&y) = nx.choose(&mut rng) else { continue };
        let common: Vec<Id> = nx.iter().copied().filter(|&z| z != y && c.adjacent(y, z)).collect();
        let Some(&z) = common.choose(&mut rng) else { continue };
        assert!(triangle_is_cyclic(g, x, y, z));
        assert!(cyclic_closure(g, &[x, y, z]), "{x} {y} {z}");
        found += 1;
    }
}

#[test]
fn every_induced_p4_in_k_has_a_non_power_middle_edge() {
    let (k, _) = k_a7().unwrap();
    let c = MaxCyclicCatalog::new(&k);
    let n = k.order() as Id;
    let adj = |x: Id, y: Id| c.adjacent(x, y);
    let mut paths = 0;
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a && adj(a, b)) {
            for cc in (0..n).filter(|&z| z != a && z != b && adj(b, z) && !adj(a, z)) {
                for d in (0..n).filter(|&z| z != b && adj(cc, z) && !adj(a, z) && !adj(b, z) && z != a) {
                    let p = [a, b, cc, d];
                    assert!(middle_edge_not_power(&k, p), "{p:?}");
                    let r = validate_general_lemma(&k, &c, &p, Shape::Path).unwrap();
                    assert!(r.all_pass(), "{p:?}: {:?}", r.failures());
                    paths += 1;
                }
            }
        }
    }
    assert!(paths > 0);
}

#[test]
fn configuration_in_a_subgroup_lifts_to_the_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut lifted_any = 0;
    for s in ["S4 x S3", "A4 x A4"] {
        let (g, c) = both(s);
        let whole = c4_witness_search(&g, &c);
        let mut ids: Vec<Id> = g.ids().collect();
        for _ in 0..40 {
            ids.shuffle(&mut rng);
            let h = g.subgroup_handle(&ids[..2]).unwrap();
            let hc = MaxCyclicCatalog::new(&h);
            if let Some(cfg) = c4_witness_search(&h, &hc) {
                let lifted = cfg.lift(&g.embed(&h).unwrap());
                lifted.validate(&g).unwrap();
                assert!(whole.is_some(), "{s}: subgroup has a configuration, group search found none");
                lifted_any += 1;
            }
        }
    }
    assert!(lifted_any > 0);
}

#[test]
fn partition_conditions_on_larger_groups() {
    let (g, c) = both("Sz(8)");
    let r = partition_equivalents(&g, &c, None);
    assert_eq!(r.verdict(), Some(false), "{r:?}");
    let (g, c) = both("PSL(2,7)");
    let e = build_enhanced_power_graph(&c).unwrap();
    assert_eq!(partition_equivalents(&g, &c, Some(&e)).verdict(), Some(true));
}

#[test]
fn fewer_than_three_maximal_cyclics_means_cyclic() {
    for s in ["C1", "C12", "C30"] {
        let (_, c) = both(s);
        assert_eq!(c.len(), 1);
        assert!(w_triple(&c).is_none() && cograph_by_chains(&c));
    }
    for s in ["E2^2", "Q8", "S3"] {
        let (_, c) = both(s);
        assert!(c.len() >= 3, "{s}");
    }
}

#[test]
fn power_graph_equals_enhanced_exactly_for_eppo_groups() {
    for s in ["S3", "S4", "A5", "D10", "Q8 x C3", "C9", "C12", "E2^2 x E3^2", "SL(2,3)", "PSL(2,8)"] {
        let (g, c) = both(s);
        assert_eq!(power_equals_enhanced(&g, &c), is_eppo(&c), "{s}");
    }
}

#[test]
fn reductions_shrink_sz8_below_the_dense_cap_only_for_c4() {
    let (_, c) = both("Sz(8)");
    let r = reductions(&c, ReductionTarget::C4Free);
    assert!(r.residual.len() < DENSE_CAP);
    let e = residual_graph(&c, &r, DENSE_CAP).unwrap();
    assert_eq!(e.graph.n(), r.residual.len());
    let cog = reductions(&c, ReductionTarget::Cograph);
    assert_eq!(cog.residual.len(), 29119);
    assert!(residual_graph(&c, &cog, DENSE_CAP).is_err());
}
