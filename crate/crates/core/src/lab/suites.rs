use std::time::Instant;

use rayon::prelude::*;

use super::classify::{classify, cross_validate, Analysis, WitnessSummary};
use super::corpus::{entries_up_to, CorpusEntry};
use super::report::{Check, CheckRoute, EntryReport, Environment, SuiteReport};
use super::{Property, Route, Tier};
use crate::epg::{
    ab_to_c4, c4_to_ab, c4_witness_search, cograph_by_chains, intersection_orders, is_induced,
    is_induced_c4, is_nilpotent, middle_edge_not_power, nilpotent_conditions,
    partition_equivalents, power_equals_enhanced, prime_intersection_check, quotient_by_cyc,
    quotient_edge_transfer, cyc_translation_invariance, reductions, residual_graph,
    validate_general_lemma, w_triple, w_triple_with_sizes, EpgGraph, ReductionTarget, Shape,
    WTriple,
};
use crate::error::{Error, Result};
use crate::graph::{has_induced_c4, is_chordal, is_cograph, DENSE_CAP};
use crate::group::{GroupHandle, Id, DEFAULT_CAP};
use crate::zoo::{a8_cycle, alternating, k_a7, psl3_witnesses};

pub const SUITES: [&str; 8] = [
    "theorem-a",
    "theorem-b",
    "nilpotent",
    "partition",
    "quotient-transfer",
    "witness-catalog",
    "eppo",
    "extended-big-groups",
];

pub fn run_suite(name: &str, tier: Tier) -> Result<SuiteReport> {
    let entries = match name {
        "theorem-a" => over_corpus(tier, |_| true, theorem_a),
        "theorem-b" => theorem_b(tier),
        "nilpotent" => over_corpus(tier, small, nilpotent),
        "partition" => over_corpus(tier, small, partition),
        "quotient-transfer" => over_corpus(tier, small, quotient_transfer),
        "witness-catalog" => witness_catalog(tier),
        "eppo" => over_corpus(tier, |_| true, eppo),
        "extended-big-groups" => extended(tier),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        entries,
        env: Environment::current(tier),
    })
}

fn small(a: &Analysis) -> bool {
    a.group.order() <= 1000
}

fn failed_build(spec: &str, e: &Error) -> EntryReport {
    EntryReport {
        spec: spec.to_string(),
        checks: vec![Check::new("build", CheckRoute::Group, false, Instant::now())
            .with_witness(&e.to_string())],
    }
}

/// Runs `f` on every corpus entry in the tier that passes `keep`. Entries
/// are independent and run in parallel; the output keeps corpus order.
fn over_corpus(
    tier: Tier,
    keep: impl Fn(&Analysis) -> bool + Sync,
    f: impl Fn(&CorpusEntry, &Analysis) -> Vec<Check> + Sync,
) -> Vec<EntryReport> {
    let entries: Vec<&CorpusEntry> = entries_up_to(tier).collect();
    entries
        .par_iter()
        .filter_map(|e| match Analysis::build(&e.spec, tier, DEFAULT_CAP) {
            Ok(a) if keep(&a) => Some(EntryReport {
                spec: e.spec.clone(),
                checks: f(e, &a),
            })
            .filter(|r| !r.checks.is_empty()),
            Ok(_) => None,
            Err(err) => Some(failed_build(&e.spec, &err)),
        })
        .collect()
}

fn timed(name: &str, route: CheckRoute, f: impl FnOnce() -> bool) -> Check {
    let t = Instant::now();
    let pass = f();
    Check::new(name, route, pass, t)
}

/// Clause checks of the path/cycle lemma on a graph witness, plus the
/// middle-edge fact for 4-paths.
fn witness_lemmas(a: &Analysis, w: &WitnessSummary) -> Option<Check> {
    let WitnessSummary::Subgraph { shape, elements, .. } = w else {
        return None;
    };
    let shape_kind = match shape.as_str() {
        "p4" => Shape::Path,
        "hole" | "c4" => Shape::Cycle,
        _ => return None,
    };
    let t = Instant::now();
    let report = validate_general_lemma(&a.group, &a.catalog, elements, shape_kind);
    let mut pass = report.as_ref().is_ok_and(|r| r.all_pass());
    if shape_kind == Shape::Path && elements.len() == 4 {
        pass &= middle_edge_not_power(&a.group, [elements[0], elements[1], elements[2], elements[3]]);
    }
    let name = format!("witness-lemmas-{shape}");
    Some(match report {
        Ok(r) => Check::new(&name, CheckRoute::Oracle, pass, t).with_witness(&r),
        Err(e) => Check::new(&name, CheckRoute::Oracle, false, t).with_witness(&e.to_string()),
    })
}

/// Closed neighbourhoods nested along every edge.
fn nested_neighbourhoods(e: &EpgGraph) -> bool {
    let g = &e.graph;
    g.edges().all(|(u, v)| {
        let (a, b) = (g.closed_row(u), g.closed_row(v));
        let sub = |x: &[u64], y: &[u64]| x.iter().zip(y).all(|(p, q)| p & !q == 0);
        sub(&a, &b) || sub(&b, &a)
    })
}

fn expectations(entry: &CorpusEntry, r: &super::ClassificationReport) -> Check {
    let t = Instant::now();
    let mut wrong = Vec::new();
    let counts = [
        ("order", r.order),
        ("max_cyclics", r.max_cyclics),
        ("cyc", r.cyc),
        ("omega", r.omega),
    ];
    for (k, got) in counts {
        if let Some(want) = entry.count(k) {
            if want as usize != got {
                wrong.push(format!("{k}: expected {want}, got {got}"));
            }
        }
    }
    for p in Property::ALL {
        if let (Some(want), Some(got)) = (entry.property(p), r.value(p)) {
            if want != got {
                wrong.push(format!("{p}: expected {want}, got {got}"));
            }
        }
    }
    let pass = wrong.is_empty();
    let c = Check::new("expected-values", CheckRoute::Both, pass, t);
    if pass {
        c
    } else {
        c.with_witness(&wrong)
    }
}

fn theorem_a(entry: &CorpusEntry, a: &Analysis) -> Vec<Check> {
    let t = Instant::now();
    let r = classify(a, &Property::ALL, Route::Both);
    let mut out = Vec::new();

    let cograph = r.value(Property::Cograph);
    let chordal = r.value(Property::Chordal);
    let c = Check::new(
        "cograph-implies-chordal",
        CheckRoute::Both,
        cograph != Some(true) || chordal == Some(true),
        t,
    );
    out.push(c.with_witness(&serde_json::json!({ "cograph": cograph, "chordal": chordal })));

    let disagreeing: Vec<&str> = r
        .properties
        .iter()
        .filter(|p| !p.agree())
        .map(|p| p.property.name())
        .collect();
    let routes = Check::new("routes-agree", CheckRoute::Both, disagreeing.is_empty(), t);
    out.push(if disagreeing.is_empty() {
        routes
    } else {
        routes.with_witness(&disagreeing)
    });
    for (name, p) in [
        ("route-agreement-cograph", Property::Cograph),
        ("route-agreement-c4", Property::C4free),
    ] {
        if let Some(res) = r.get(p).filter(|x| x.graph.is_some() && x.group.is_some()) {
            out.push(Check::new(name, CheckRoute::Both, res.agree(), t));
        }
    }
    if let (Some(q), Some(c)) = (
        r.get(Property::Qthreshold).and_then(|x| x.graph),
        r.get(Property::Cograph).and_then(|x| x.graph),
    ) {
        out.push(Check::new("quasi-threshold-iff-cograph", CheckRoute::Graph, q == c, t));
    }
    out.push(expectations(entry, &r));
    out.push(timed("omega-is-max-element-order", CheckRoute::Oracle, || {
        a.catalog.omega() == a.group.max_element_order()
    }));
    if let (Some(e), Some(c)) = (&a.graph, cograph) {
        if a.group.order() <= 2000 {
            out.push(timed("neighbourhood-nesting", CheckRoute::Graph, || {
                nested_neighbourhoods(e) == c
            }));
        }
    }
    for p in &r.properties {
        if let Some(c) = p.witness.as_ref().and_then(|w| witness_lemmas(a, w)) {
            out.push(c);
        }
    }
    if a.group.order() <= 500 {
        out.extend(cross_validate(a));
    }
    out
}

fn nilpotent(_: &CorpusEntry, a: &Analysis) -> Vec<Check> {
    if !is_nilpotent(&a.group) {
        return Vec::new();
    }
    let t = Instant::now();
    let r = nilpotent_conditions(&a.group, a.graph.as_ref());
    vec![Check::new("conditions-agree", CheckRoute::Both, r.all_equal(), t).with_witness(&r)]
}

fn partition(_: &CorpusEntry, a: &Analysis) -> Vec<Check> {
    let t = Instant::now();
    let r = partition_equivalents(&a.group, &a.catalog, a.graph.as_ref());
    vec![Check::new("conditions-agree", CheckRoute::Both, r.all_equal(), t).with_witness(&r)]
}

fn quotient_transfer(_: &CorpusEntry, a: &Analysis) -> Vec<Check> {
    let (g, c) = (&a.group, &a.catalog);
    if c.cyc().len() <= 1 {
        return Vec::new();
    }
    let t = Instant::now();
    let route = match quotient_by_cyc(g, c) {
        Ok(q) => q,
        Err(e) => {
            return vec![Check::new("quotient", CheckRoute::Group, false, t).with_witness(&e.to_string())]
        }
    };
    let mut out = Vec::new();
    let bad = quotient_edge_transfer(c, &route);
    let check = Check::new("edge-transfer", CheckRoute::Oracle, bad.is_none(), t);
    out.push(match bad {
        Some(pair) => check.with_witness(&pair),
        None => check,
    });
    if g.order() * c.cyc().len() <= 1000 {
        let t = Instant::now();
        let bad = cyc_translation_invariance(g, c);
        let check = Check::new("cyc-translation", CheckRoute::Oracle, bad.is_none(), t);
        out.push(match bad {
            Some(w) => check.with_witness(&w),
            None => check,
        });
    }

    // both directions of the transfer for twin-free forbidden subgraphs
    let (Some(e), Ok(qe)) = (&a.graph, crate::epg::build_enhanced_power_graph(&route.catalog)) else {
        return out;
    };
    let tests: [(&str, fn(&EpgGraph) -> bool); 3] = [
        ("cograph", |x| is_cograph(&x.graph).is_member()),
        ("chordal", |x| is_chordal(&x.graph).is_member()),
        ("c4free", |x| has_induced_c4(&x.graph).is_none()),
    ];
    for (name, f) in tests {
        let t = Instant::now();
        let (up, down) = (f(e), f(&qe));
        out.push(
            Check::new(&format!("quotient-forward-{name}"), CheckRoute::Graph, !down || up, t)
                .with_witness(&serde_json::json!({ "group": up, "quotient": down })),
        );
        out.push(
            Check::new(&format!("quotient-converse-{name}"), CheckRoute::Graph, !up || down, t)
                .with_witness(&serde_json::json!({ "group": up, "quotient": down })),
        );
    }
    out
}

fn eppo(_: &CorpusEntry, a: &Analysis) -> Vec<Check> {
    if !a.catalog.is_eppo() {
        return Vec::new();
    }
    let r = classify(a, &[Property::Eppo, Property::Cograph, Property::Chordal], Route::Both);
    let mut out = vec![timed("power-equals-enhanced", CheckRoute::Graph, || {
        power_equals_enhanced(&a.group, &a.catalog)
    })];
    for p in &r.properties {
        let route = match (p.graph, p.group) {
            (Some(_), Some(_)) => CheckRoute::Both,
            (Some(_), None) => CheckRoute::Graph,
            _ => CheckRoute::Group,
        };
        let pass = p.value() == Some(true) && p.agree();
        let mut c = Check::new(p.property.name(), route, pass, Instant::now());
        c.millis = p.millis;
        out.push(c);
    }
    out
}

struct Job {
    spec: &'static str,
    tier: Tier,
    run: fn(&Analysis) -> Vec<Check>,
}

fn run_jobs(jobs: Vec<Job>, tier: Tier) -> Vec<EntryReport> {
    jobs.par_iter()
        .filter(|j| j.tier <= tier)
        .map(|j| match Analysis::build(j.spec, tier, DEFAULT_CAP) {
            Ok(a) => EntryReport {
                spec: a.spec.clone(),
                checks: (j.run)(&a),
            },
            Err(e) => failed_build(j.spec, &e),
        })
        .collect()
}

fn triple_check(name: &str, a: &Analysis, t: Option<WTriple>) -> Check {
    let start = Instant::now();
    let ok = t.as_ref().is_some_and(|t| t.verify(&a.catalog));
    let c = Check::new(name, CheckRoute::Group, ok, start);
    match t {
        Some(t) => c.with_witness(&t),
        None => c,
    }
}

fn positive(a: &Analysis) -> Vec<Check> {
    let c = &a.catalog;
    let mut out = vec![
        timed("cograph-by-chains", CheckRoute::Group, || cograph_by_chains(c)),
        timed("intersections-are-2-groups", CheckRoute::Group, || {
            prime_intersection_check(c, 2)
        })
        .with_witness(&intersection_orders(c)),
    ];
    let bound = if a.spec.starts_with("PSL(2,") { 1 } else { 2 };
    out.push(timed(&format!("intersections-at-most-{bound}"), CheckRoute::Group, || {
        intersection_orders(c).iter().all(|&s| s <= bound)
    }));
    if let Some(e) = &a.graph {
        out.push(timed("cotree-agrees", CheckRoute::Graph, || {
            is_cograph(&e.graph).is_member()
        }));
    }
    out
}

fn negative_triple(a: &Analysis) -> Vec<Check> {
    let t = if a.spec == "M11" {
        w_triple_with_sizes(&a.catalog, [6, 6, 8])
    } else {
        w_triple(&a.catalog)
    };
    let mut out = vec![triple_check("violating-triple", a, t)];
    if let Some(e) = &a.graph {
        out.push(timed("cotree-agrees", CheckRoute::Graph, || {
            !is_cograph(&e.graph).is_member()
        }));
    }
    out
}

fn configuration(a: &Analysis) -> Vec<Check> {
    let t = Instant::now();
    let found = c4_witness_search(&a.group, &a.catalog);
    let ok = found.is_some_and(|cfg| ab_to_c4(&a.group, &cfg).is_ok());
    let mut c = Check::new("ab-configuration", CheckRoute::Group, ok, t);
    if let Some(cfg) = found {
        c = c.with_witness(&serde_json::json!({
            "elements": cfg,
            "orders": cfg.orders(&a.group),
            "rendered": cfg.cycle().map(|x| a.group.render(x)),
        }));
    }
    let mut out = vec![c];
    if let Some(e) = &a.graph {
        out.push(timed("c4-scan-agrees", CheckRoute::Graph, || {
            has_induced_c4(&e.graph).is_some()
        }));
    }
    if a.spec == "A8" {
        out.push(timed("explicit-cycle", CheckRoute::Oracle, || {
            a8_cycle(&a.group).is_some_and(|cyc| {
                let mut o = c4_to_ab(&a.group, cyc).map(|cfg| cfg.orders(&a.group)).unwrap_or_default();
                o.sort_unstable();
                is_induced_c4(&a.group, cyc) && o == [2, 2, 3, 3]
            })
        }));
    }
    if let Some(cfg) = found {
        out.push(timed("embedded-configuration", CheckRoute::Group, || {
            embedded_search(&a.group, &cfg.cycle())
        }));
    }
    out
}

/// Searches the subgroup generated by `seeds` on its own and lifts what it
/// finds back to `g`.
fn embedded_search(g: &GroupHandle, seeds: &[Id]) -> bool {
    let Ok(h) = g.subgroup_handle(seeds) else {
        return false;
    };
    let Some(emb) = g.embed(&h) else {
        return false;
    };
    let hc = crate::epg::MaxCyclicCatalog::new(&h);
    c4_witness_search(&h, &hc).is_some_and(|cfg| cfg.lift(&emb).validate(g).is_ok())
}

fn theorem_b(tier: Tier) -> Vec<EntryReport> {
    let mut jobs = Vec::new();
    for s in ["PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "PSL(2,11)", "PSL(2,13)"] {
        jobs.push(Job { spec: s, tier: Tier::Fast, run: positive });
    }
    for s in ["PSL(3,4)", "Sz(8)"] {
        jobs.push(Job { spec: s, tier: Tier::Standard, run: positive });
    }
    for s in ["A7", "PSL(3,3)", "PSU(3,3)", "M11", "PSL(3,5)"] {
        jobs.push(Job { spec: s, tier: Tier::Standard, run: negative_triple });
    }
    for s in ["E2^2 x E3^2", "A4 x S3", "A4 x E2^2", "CP(SL(2,3),Q8)", "SL(2,3) x Q8"] {
        jobs.push(Job { spec: s, tier: Tier::Fast, run: configuration });
    }
    jobs.push(Job { spec: "A8", tier: Tier::Standard, run: configuration });
    jobs.push(Job { spec: "M12", tier: Tier::Standard, run: configuration });
    jobs.push(Job { spec: "M22", tier: Tier::Extended, run: configuration });
    run_jobs(jobs, tier)
}

fn labelled_triple(g: &GroupHandle, a: &Analysis, q: u32) -> Option<WTriple> {
    let (h, w) = psl3_witnesses(q).ok()?;
    // the labelled group and `g` are built the same way; match by raw form
    let find = |name: &str| g.id_of(h.element(w.get(name)?));
    let (x, ea, b) = (find("x")?, find("a")?, find("b")?);
    let c = &a.catalog;
    let index_of = |u: Id, v: Id| {
        let gen = g.two_generated_cyclic(u, v).generator?;
        c.membership(gen).first().copied()
    };
    let ia = index_of(ea, x)?;
    let ib = index_of(ea, b)?;
    let d = crate::field::gcd(3, q as usize - 1);
    let singer = (q as usize * q as usize - 1) / d;
    let ic = c
        .membership(x)
        .iter()
        .copied()
        .find(|&i| c.subgroups()[i as usize].size() == singer)?;
    let s = |i: u32| c.subgroups()[i as usize].members.clone();
    let (sa, sb, sc) = (s(ia), s(ib), s(ic));
    Some(WTriple {
        a: ia,
        b: ib,
        c: ic,
        sizes: [sa.len(), sb.len(), sc.len()],
        ab: sa.intersection(&sb).len(),
        ac: sa.intersection(&sc).len(),
    })
}

fn witness_catalog(tier: Tier) -> Vec<EntryReport> {
    let mut jobs = vec![
        Job {
            spec: "K_A7",
            tier: Tier::Fast,
            run: |a| {
                let mut out = Vec::new();
                let Ok((k, w)) = k_a7() else {
                    return vec![Check::new("labels", CheckRoute::Oracle, false, Instant::now())];
                };
                let p: Vec<Id> = ["y", "a", "x2", "x"]
                    .iter()
                    .filter_map(|n| w.get(n))
                    .collect();
                out.push(timed("order-24", CheckRoute::Oracle, || k.order() == 24));
                out.push(timed("induced-p4", CheckRoute::Oracle, || {
                    p.len() == 4 && is_induced(&a.group, &p, Shape::Path)
                }));
                if let Some(c) = witness_lemmas(
                    a,
                    &WitnessSummary::Subgraph {
                        shape: "p4".into(),
                        elements: p.clone(),
                        rendered: Vec::new(),
                    },
                ) {
                    out.push(c);
                }
                out.push(timed("induced-p4-in-a7", CheckRoute::Oracle, || {
                    let Ok(a7) = alternating(7, DEFAULT_CAP) else {
                        return false;
                    };
                    let lifted: Option<Vec<Id>> = p.iter().map(|&x| a7.id_of(k.element(x))).collect();
                    lifted.is_some_and(|l| is_induced(&a7, &l, Shape::Path))
                }));
                out
            },
        },
        Job {
            spec: "A8",
            tier: Tier::Standard,
            run: |a| {
                let Some(cyc) = a8_cycle(&a.group) else {
                    return vec![Check::new("locate-cycle", CheckRoute::Oracle, false, Instant::now())];
                };
                let mut out = vec![timed("induced-c4", CheckRoute::Oracle, || {
                    is_induced_c4(&a.group, cyc)
                })];
                out.push(timed("configuration-orders", CheckRoute::Oracle, || {
                    c4_to_ab(&a.group, cyc).is_ok_and(|cfg| cfg.orders(&a.group) == [2, 2, 3, 3])
                }));
                let w = WitnessSummary::Subgraph {
                    shape: "c4".into(),
                    elements: cyc.to_vec(),
                    rendered: Vec::new(),
                };
                out.extend(witness_lemmas(a, &w));
                out
            },
        },
        Job {
            spec: "PSL(3,3)",
            tier: Tier::Standard,
            run: |a| vec![triple_check("labelled-triple", a, labelled_triple(&a.group, a, 3))],
        },
        Job {
            spec: "PSL(3,5)",
            tier: Tier::Standard,
            run: |a| vec![triple_check("labelled-triple", a, labelled_triple(&a.group, a, 5))],
        },
        Job {
            spec: "M11",
            tier: Tier::Standard,
            run: |a| {
                vec![triple_check("triple-6-6-8", a, w_triple_with_sizes(&a.catalog, [6, 6, 8]))]
            },
        },
    ];
    jobs.push(Job {
        spec: "J1",
        tier: Tier::Extended,
        run: |a| vec![triple_check("triple-15-10-6", a, w_triple_with_sizes(&a.catalog, [15, 10, 6]))],
    });
    run_jobs(jobs, tier)
}

fn j1(a: &Analysis) -> Vec<Check> {
    let (g, c) = (&a.group, &a.catalog);
    let mut out = vec![triple_check(
        "triple-15-10-6",
        a,
        w_triple_with_sizes(c, [15, 10, 6]),
    )];
    out.push(timed("c4-free-by-search", CheckRoute::Group, || {
        c4_witness_search(g, c).is_none()
    }));
    let r = reductions(c, ReductionTarget::C4Free);
    let t = Instant::now();
    let check = match residual_graph(c, &r, DENSE_CAP) {
        Ok(e) => {
            let free = has_induced_c4(&e.graph).is_none();
            Check::new("c4-free-by-reduction", CheckRoute::Graph, free, t)
                .with_witness(&serde_json::json!({ "residual": r.residual.len() }))
        }
        Err(e) => Check::new("skipped: c4-free-by-reduction", CheckRoute::Graph, true, t)
            .with_witness(&e.to_string()),
    };
    out.push(check);
    out.push(timed("residual-count", CheckRoute::Oracle, || {
        let expected = g
            .ids()
            .filter(|&x| {
                matches!(g.element_order(x), 2 | 3 | 5) && c.membership(x).len() >= 2
            })
            .count();
        expected == r.residual.len()
    }));
    out
}

fn extended(tier: Tier) -> Vec<EntryReport> {
    if tier < Tier::Extended {
        return ["M22", "J1"]
            .iter()
            .map(|s| EntryReport {
                spec: s.to_string(),
                checks: vec![Check::new(
                    "skipped: tier below extended",
                    CheckRoute::Group,
                    true,
                    Instant::now(),
                )],
            })
            .collect();
    }
    let jobs = vec![
        Job {
            spec: "M22",
            tier: Tier::Extended,
            run: |a| {
                let mut out = configuration(a);
                out.push(triple_check("violating-triple", a, w_triple(&a.catalog)));
                out
            },
        },
        Job {
            spec: "J1",
            tier: Tier::Extended,
            run: j1,
        },
    ];
    run_jobs(jobs, tier)
}
