//! Acceptance criteria, one line per criterion. Every expected value is
//! checked against a brute-force recomputation or a hand-derived count.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use epg::epg::*;
use epg::graph::*;
use epg::group::{GroupHandle, Id, DEFAULT_CAP};
use epg::lab::{classify, corpus, run_suite, Analysis, Property, Route, Tier};
use epg::zoo::{a8_cycle, alternating, k_a7};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn load(spec: &str) -> Analysis {
    Analysis::build(spec, Tier::Extended, DEFAULT_CAP).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// `<x, y>` is cyclic, decided from the generated subgroup itself.
fn cyclic_pair(g: &GroupHandle, x: Id, y: Id) -> bool {
    let h = g.subgroup_closure(&[x, y]);
    h.members().iter().any(|&z| g.element_order(z) == h.len())
}

fn induced_cycle(g: &GroupHandle, c: [Id; 4]) -> bool {
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| c[i] != c[j]));
    distinct
        && (0..4).all(|i| cyclic_pair(g, c[i], c[(i + 1) % 4]))
        && !cyclic_pair(g, c[0], c[2])
        && !cyclic_pair(g, c[1], c[3])
}

fn induced_path(g: &GroupHandle, p: [Id; 4]) -> bool {
    (0..4).all(|i| {
        (i + 1..4).all(|j| p[i] != p[j] && cyclic_pair(g, p[i], p[j]) == (j == i + 1))
    })
}

/// Sorted cycle lengths of a permutation given by its images.
fn cycle_type(images: &[u16]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = images[i] as usize;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable();
    out
}

/// Recomputes `A ∩ B` and `A ∩ C` from member lists and checks that
/// neither contains the other.
fn incomparable(c: &MaxCyclicCatalog, t: &WTriple) -> bool {
    let s = |i: u32| c.subgroups()[i as usize].members.clone();
    let (a, b, cc) = (s(t.a), s(t.b), s(t.c));
    let ab = a.intersection(&b);
    let ac = a.intersection(&cc);
    !ab.is_subset(&ac) && !ac.is_subset(&ab)
}

fn value(a: &Analysis, p: Property) -> (Option<bool>, Option<bool>) {
    let r = classify(a, &[p], Route::Both);
    let res = r.get(p).expect("requested property");
    (res.graph, res.group)
}

fn structural_constants() -> Outcome {
    let q8 = load("Q8");
    let (g, c) = (&q8.group, &q8.catalog);
    let star = g
        .ids()
        .filter(|&z| g.ids().all(|x| cyclic_pair(g, z, x)))
        .count();
    ensure!(c.cyc().len() == 2 && star == 2, "Cyc(Q8) = {}, brute {star}", c.cyc().len());

    let a = load("C2 x C2 x C3");
    let (g, c) = (&a.group, &a.catalog);
    let e = a.graph.as_ref().unwrap();
    let cliques = maximal_cliques(&e.graph).len();
    let maximal = g
        .ids()
        .filter(|&x| {
            g.ids()
                .all(|y| !g.in_cyclic(x, y) || g.element_order(y) <= g.element_order(x))
        })
        .count();
    let sl = e.graph.simplicial_vertices().len();
    ensure!(
        (c.len(), c.maximal_elements().len(), c.simplicial().len()) == (3, 6, 9)
            && (cliques, maximal, sl) == (3, 6, 9),
        "C2xC2xC3: catalog ({}, {}, {}), brute ({cliques}, {maximal}, {sl})",
        c.len(),
        c.maximal_elements().len(),
        c.simplicial().len()
    );

    let entries = corpus();
    for entry in entries {
        let a = load(&entry.spec);
        let max_order = *a.group.orders().iter().max().unwrap() as usize;
        ensure!(a.catalog.omega() == max_order, "{}: omega {} vs {max_order}", entry.spec, a.catalog.omega());
        if let Some(e) = a.graph.as_ref().filter(|_| a.group.order() <= 2000) {
            let clique = maximal_cliques(&e.graph).iter().map(Vec::len).max().unwrap();
            ensure!(clique == max_order, "{}: clique number {clique}", entry.spec);
        }
    }
    Ok(format!("Cyc(Q8)=2; M=3, |M(G)|=6, sl=9; omega over {} groups", entries.len()))
}

fn example_path() -> Outcome {
    let (k, w) = k_a7().map_err(|e| e.to_string())?;
    ensure!(k.order() == 24, "|K| = {}", k.order());
    let name = |s: &str| w.get(s).unwrap();
    let p = [name("y"), name("a"), name("x2"), name("x")];
    ensure!(induced_path(&k, p), "(y, a, x^2, x) is not an induced path in K");

    let a7 = alternating(7, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let lifted = p.map(|x| a7.id_of(k.element(x)).unwrap());
    ensure!(induced_path(&a7, lifted), "path does not survive in A7");
    let a = load("A7");
    let (graph, group) = value(&a, Property::Cograph);
    ensure!(graph == Some(false) && group == Some(false), "A7 cograph: graph {graph:?}, group {group:?}");
    Ok("|K|=24, induced P4 in K and A7, A7 not a cograph".into())
}

fn a7_chordal() -> Outcome {
    let a = load("A7");
    let (g, c) = (&a.group, &a.catalog);
    let full = is_chordal(&a.graph.as_ref().unwrap().graph).is_member();
    let r = reductions(c, ReductionTarget::Chordal);
    let residual = residual_graph(c, &r, DENSE_CAP).map_err(|e| e.to_string())?;
    let reduced = is_chordal(&residual.graph).is_member();
    let types: Vec<Vec<usize>> = r
        .residual
        .iter()
        .map(|&x| cycle_type(g.element(x)))
        .collect();
    let allowed = types
        .iter()
        .all(|t| *t == [1, 1, 1, 1, 3] || *t == [1, 1, 1, 2, 2]);
    // the removed set is exactly M(A7) together with the identity
    let mut u: Vec<Id> = c.maximal_elements().members().to_vec();
    u.push(g.ids().find(|&x| g.element_order(x) == 1).unwrap());
    u.sort_unstable();
    ensure!(u == r.removed, "removed set differs from M(A7) and the identity");
    ensure!(allowed, "residual has other cycle types");
    // 70 three-cycles and 105 double transpositions
    ensure!(r.residual.len() == 2 * 35 + 105, "residual has {} vertices", r.residual.len());
    ensure!(full && reduced, "chordal: full {full}, reduced {reduced}");
    Ok(format!("chordal on 2520 vertices and on the {}-vertex residual", r.residual.len()))
}

fn inclusion_chain() -> Outcome {
    let mut notes = Vec::new();
    let mut expect = |spec: &str, p: Property, want: bool| -> Result<(), String> {
        let a = load(spec);
        let (graph, group) = value(&a, p);
        let ok = [graph, group].iter().flatten().all(|&v| v == want) && (graph.is_some() || group.is_some());
        ensure!(ok, "{spec} {p}: graph {graph:?}, group {group:?}, want {want}");
        notes.push(format!("{spec} {p}={want}"));
        Ok(())
    };
    expect("S6", Property::C4free, true)?;
    expect("S6", Property::Chordal, false)?;
    expect("PSL(2,7)", Property::Qthreshold, true)?;
    expect("PSL(2,7)", Property::Threshold, false)?;
    expect("Sz(8)", Property::Cograph, true)?;
    expect("Sz(8)", Property::Block, false)?;
    for q in [4, 5, 7, 8, 9, 11, 13] {
        expect(&format!("PSL(2,{q})"), Property::Block, true)?;
    }
    Ok(format!("{} verdicts", notes.len()))
}

fn positive_cases() -> Outcome {
    let mut specs: Vec<String> = [4, 5, 7, 8, 9, 11, 13].iter().map(|q| format!("PSL(2,{q})")).collect();
    specs.push("PSL(3,4)".into());
    specs.push("Sz(8)".into());
    for spec in &specs {
        let a = load(spec);
        let c = &a.catalog;
        let (graph, group) = value(&a, Property::Cograph);
        ensure!(group == Some(true) && graph != Some(false), "{spec}: graph {graph:?}, group {group:?}");
        let orders = intersection_orders(c);
        ensure!(orders.iter().all(|o| o.is_power_of_two()), "{spec}: intersections {orders:?}");
        let bound = match spec.as_str() {
            "Sz(8)" => 2,
            "PSL(3,4)" => usize::MAX,
            _ => 1,
        };
        ensure!(orders.iter().all(|&o| o <= bound), "{spec}: intersections {orders:?}");
        if spec.starts_with("PSL(2,") {
            let subs = c.subgroups();
            let brute = (0..subs.len())
                .all(|i| (i + 1..subs.len()).all(|j| subs[i].members.intersection(&subs[j].members).len() == 1));
            ensure!(brute, "{spec}: a pair of maximal cyclics meets nontrivially");
        }
    }
    Ok(format!("{} groups are cographs with 2-group intersections", specs.len()))
}

fn negative_cases() -> Outcome {
    for spec in ["PSL(3,3)", "PSL(3,5)", "PSU(3,3)", "M11", "A7"] {
        let a = load(spec);
        let t = if spec == "M11" {
            w_triple_with_sizes(&a.catalog, [6, 6, 8])
        } else {
            w_triple(&a.catalog)
        };
        let t = t.ok_or(format!("{spec}: no triple"))?;
        ensure!(incomparable(&a.catalog, &t), "{spec}: triple {t:?} does not verify");
    }

    let a8 = load("A8");
    let cyc = a8_cycle(&a8.group).ok_or("A8: explicit cycle not found")?;
    ensure!(induced_cycle(&a8.group, cyc), "A8: explicit cycle is not induced");
    let mut orders = c4_to_ab(&a8.group, cyc).map_err(|e| e.to_string())?.orders(&a8.group);
    orders.sort_unstable();
    ensure!(orders == [2, 2, 3, 3], "A8: configuration orders {orders:?}");

    let specs = ["A8", "E2^2 x E3^2", "A4 x S3", "A4 x E2^2", "CP(SL(2,3),Q8)", "SL(2,3) x Q8", "M12", "M22"];
    let mut embedded = 0;
    for spec in specs {
        let a = load(spec);
        let g = &a.group;
        let cfg = c4_witness_search(g, &a.catalog).ok_or(format!("{spec}: no configuration"))?;
        ensure!(induced_cycle(g, cfg.cycle()), "{spec}: configuration is not an induced C4");
        if spec == "M12" {
            let h = g.subgroup_handle(&cfg.cycle()).map_err(|e| e.to_string())?;
            let emb = g.embed(&h).ok_or("M12: embedding failed")?;
            let sub = c4_witness_search(&h, &MaxCyclicCatalog::new(&h)).ok_or("M12: subgroup search failed")?;
            ensure!(induced_cycle(g, sub.lift(&emb).cycle()), "M12: lifted configuration not induced");
            embedded = h.order();
        }
    }
    Ok(format!("5 triples, {} C4 witnesses (M12 through a subgroup of order {embedded})", specs.len()))
}

fn m11_split() -> Outcome {
    let t = Instant::now();
    let a = load("M11");
    let e = a.graph.as_ref().ok_or("M11: no graph")?;
    let graph_c4 = has_induced_c4(&e.graph);
    let group_c4 = c4_witness_search(&a.group, &a.catalog);
    let graph_cograph = is_cograph(&e.graph).is_member();
    let group_cograph = cograph_by_chains(&a.catalog);
    let secs = t.elapsed().as_secs_f64();
    ensure!(graph_c4.is_none() && group_c4.is_none(), "M11 has a C4");
    ensure!(!graph_cograph && !group_cograph, "M11 reported as cograph");
    ensure!(secs < 60.0, "M11 took {secs:.1}s");
    Ok(format!("C4-free and not a cograph by both routes in {secs:.1}s"))
}

fn suite(name: &str, min_entries: usize) -> Outcome {
    let r = run_suite(name, Tier::Fast).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "{name}: failing {:?}", r.failures());
    ensure!(r.entries.len() >= min_entries, "{name}: only {} groups", r.entries.len());
    Ok(format!("{name}: {} groups, {} checks", r.entries.len(), r.check_count()))
}

fn property_suites() -> Outcome {
    let mut notes = Vec::new();
    for name in ["theorem-a", "quotient-transfer", "eppo"] {
        notes.push(suite(name, 1)?);
    }
    let mut r = common::rng(7);
    for round in 0..500 {
        let g = common::random_graph(&mut r);
        common::compare_with_exhaustive(&g).map_err(|what| format!("random graph {round}: {what}"))?;
    }
    notes.push("500 random graphs".into());
    Ok(notes.join("; "))
}

fn extended_j1() -> Outcome {
    let a = load("J1");
    let c = &a.catalog;
    let t = w_triple_with_sizes(c, [15, 10, 6]).ok_or("J1: no (15,10,6) triple")?;
    ensure!(incomparable(c, &t), "J1: triple does not verify");
    let r = reductions(c, ReductionTarget::C4Free);
    let residual = residual_graph(c, &r, DENSE_CAP).map_err(|e| e.to_string())?;
    ensure!(has_induced_c4(&residual.graph).is_none(), "J1: residual has a C4");
    ensure!(c4_witness_search(&a.group, c).is_none(), "J1: group search found a configuration");
    Ok(format!("(15,10,6) triple; C4-free on the {}-vertex residual", r.residual.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("structural constants", structural_constants),
        ("example path in K and A7", example_path),
        ("A7 chordal by reduction and directly", a7_chordal),
        ("inclusion chain witnesses", inclusion_chain),
        ("positive cograph cases", positive_cases),
        ("negative cases: triples and C4 witnesses", negative_cases),
        ("M11 split", m11_split),
        ("nilpotent conditions", || suite("nilpotent", 30)),
        ("partition conditions", || suite("partition", 1)),
        ("property suites", property_suites),
        ("J1", extended_j1),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
