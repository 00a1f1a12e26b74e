use std::cell::OnceCell;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::report::{Check, CheckRoute};
use super::{Property, Route, Tier};
use crate::epg::{
    build_enhanced_pairwise, build_enhanced_power_graph, build_power_graph, c4_witness_search,
    intersection_orders, power_equals_enhanced, reductions, residual_graph, w_triple,
    ABConfiguration, EpgGraph, MaxCyclicCatalog, ReductionTarget, WTriple,
};
use crate::error::{Error, Result};
use crate::expr::parse;
use crate::graph::{
    find_2k2, has_induced_c4, is_block_graph, is_chordal, is_cograph, is_diamond_free,
    is_quasi_threshold, is_threshold, maximal_cliques, Certified, Witness, DENSE_CAP,
};
use crate::group::{GroupHandle, Id};
use crate::zoo::{build_named, expected_order};

/// A group with its catalog and, when small enough, its full graph.
#[derive(Debug)]
pub struct Analysis {
    pub spec: String,
    pub group: GroupHandle,
    pub catalog: MaxCyclicCatalog,
    pub graph: Option<EpgGraph>,
}

impl Analysis {
    /// Parses and builds `spec`, refusing orders above the tier limit.
    pub fn build(spec: &str, tier: Tier, cap: usize) -> Result<Self> {
        let e = parse(spec)?;
        let limit = tier.limit().min(cap);
        if expected_order(&e).is_some_and(|o| o > limit as u128) {
            return Err(Error::CapExceeded { cap: limit });
        }
        let built = build_named(&e, limit)?;
        Ok(Analysis::new(e.to_string(), built.group))
    }

    pub fn new(spec: String, group: GroupHandle) -> Self {
        let catalog = MaxCyclicCatalog::new(&group);
        let graph = if group.order() <= DENSE_CAP {
            build_enhanced_power_graph(&catalog).ok()
        } else {
            None
        };
        Analysis {
            spec,
            group,
            catalog,
            graph,
        }
    }

    /// The full graph if present, else the reduced graph for `target` when
    /// that fits.
    fn graph_for(&self, target: ReductionTarget) -> Option<(GraphRef<'_>, &'static str)> {
        if let Some(g) = &self.graph {
            return Some((GraphRef::Borrowed(g), "full"));
        }
        let r = reductions(&self.catalog, target);
        residual_graph(&self.catalog, &r, DENSE_CAP)
            .ok()
            .map(|g| (GraphRef::Owned(g), "reduced"))
    }

    /// A graph witness translated to element ids.
    pub fn summarize(&self, graph: &EpgGraph, w: &Witness) -> WitnessSummary {
        let kind = match w {
            Witness::P4(_) => "p4",
            Witness::Hole(_) => "hole",
            Witness::C4(_) => "c4",
            Witness::Diamond(_) => "diamond",
            Witness::TwoK2(_) => "2k2",
        };
        let elements = graph.elements(w.vertices());
        WitnessSummary::Subgraph {
            shape: kind.to_string(),
            rendered: elements.iter().map(|&x| self.group.render(x)).collect(),
            elements,
        }
    }
}

enum GraphRef<'a> {
    Borrowed(&'a EpgGraph),
    Owned(EpgGraph),
}

impl GraphRef<'_> {
    fn get(&self) -> &EpgGraph {
        match self {
            GraphRef::Borrowed(g) => g,
            GraphRef::Owned(g) => g,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessSummary {
    /// An induced subgraph of the enhanced power graph.
    Subgraph {
        shape: String,
        elements: Vec<Id>,
        rendered: Vec<String>,
    },
    Triple(WTriple),
    Configuration {
        elements: ABConfiguration,
        orders: [usize; 4],
    },
    Note {
        text: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: Property,
    pub graph: Option<bool>,
    pub group: Option<bool>,
    /// `full` or `reduced` when the graph route ran.
    pub graph_scope: Option<String>,
    pub witness: Option<WitnessSummary>,
    pub millis: u64,
}

impl PropertyResult {
    pub fn value(&self) -> Option<bool> {
        self.graph.or(self.group)
    }

    pub fn agree(&self) -> bool {
        match (self.graph, self.group) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub spec: String,
    pub order: usize,
    pub max_cyclics: usize,
    pub cyc: usize,
    pub maximal_elements: usize,
    pub simplicial: usize,
    pub omega: usize,
    pub properties: Vec<PropertyResult>,
    pub consistent: bool,
}

impl ClassificationReport {
    pub fn get(&self, p: Property) -> Option<&PropertyResult> {
        self.properties.iter().find(|r| r.property == p)
    }

    pub fn value(&self, p: Property) -> Option<bool> {
        self.get(p).and_then(|r| r.value())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub props: Vec<Property>,
    pub route: Route,
    pub tier: Tier,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            props: Property::ALL.to_vec(),
            route: Route::Both,
            tier: Tier::Standard,
            cap: crate::group::DEFAULT_CAP,
        }
    }
}

pub fn classify_group(spec: &str, opts: &Options) -> Result<ClassificationReport> {
    let a = Analysis::build(spec, opts.tier, opts.cap)?;
    Ok(classify(&a, &opts.props, opts.route))
}

fn certified<C>(c: Certified<C>) -> (bool, Option<Witness>) {
    match c {
        Certified::Member(_) => (true, None),
        Certified::Witness(w) => (false, Some(w)),
    }
}

pub fn classify(a: &Analysis, props: &[Property], route: Route) -> ClassificationReport {
    let c = &a.catalog;
    let triple: OnceCell<Option<WTriple>> = OnceCell::new();
    let config: OnceCell<Option<ABConfiguration>> = OnceCell::new();
    let triple = || triple.get_or_init(|| w_triple(c)).clone();
    let config = || *config.get_or_init(|| c4_witness_search(&a.group, c));
    let trivial_meets = || c.is_cyclic_group() || intersection_orders(c).iter().all(|&s| s == 1);
    let cfg_summary = |cfg: ABConfiguration| WitnessSummary::Configuration {
        elements: cfg,
        orders: cfg.orders(&a.group),
    };

    let mut properties = Vec::new();
    for &p in props {
        let t = Instant::now();
        let mut r = PropertyResult {
            property: p,
            graph: None,
            group: None,
            graph_scope: None,
            witness: None,
            millis: 0,
        };

        if route.graph() {
            let target = match p {
                Property::Chordal => Some(ReductionTarget::Chordal),
                Property::C4free => Some(ReductionTarget::C4Free),
                Property::Cograph => Some(ReductionTarget::Cograph),
                _ => None,
            };
            let found = match target {
                Some(t) => a.graph_for(t),
                None => a.graph.as_ref().map(|g| (GraphRef::Borrowed(g), "full")),
            };
            if let Some((g, scope)) = found {
                let e = g.get();
                let (value, w) = match p {
                    Property::Cograph => certified(is_cograph(&e.graph)),
                    Property::Chordal => certified(is_chordal(&e.graph)),
                    Property::C4free => {
                        let w = has_induced_c4(&e.graph);
                        (w.is_none(), w)
                    }
                    Property::Diamond => {
                        let w = is_diamond_free(&e.graph);
                        (w.is_none(), w)
                    }
                    Property::Block => {
                        let ok = is_block_graph(&e.graph);
                        let w = if ok {
                            None
                        } else {
                            is_chordal(&e.graph)
                                .witness()
                                .cloned()
                                .or_else(|| is_diamond_free(&e.graph))
                        };
                        (ok, w)
                    }
                    Property::Qthreshold => (is_quasi_threshold(&e.graph), None),
                    Property::Threshold => {
                        let ok = is_threshold(&e.graph);
                        let w = if ok {
                            None
                        } else {
                            is_cograph(&e.graph)
                                .witness()
                                .cloned()
                                .or_else(|| has_induced_c4(&e.graph))
                                .or_else(|| find_2k2(&e.graph))
                        };
                        (ok, w)
                    }
                    Property::Eppo => {
                        let same = match build_power_graph(&a.group, c) {
                            Ok(pg) => pg.graph == e.graph,
                            Err(_) => power_equals_enhanced(&a.group, c),
                        };
                        (same, None)
                    }
                };
                r.graph = Some(value);
                r.graph_scope = Some(scope.to_string());
                r.witness = w.map(|w| a.summarize(e, &w));
            } else if p == Property::Eppo {
                r.graph = Some(power_equals_enhanced(&a.group, c));
                r.graph_scope = Some("sparse".to_string());
            }
        }

        if route.group() {
            let (value, w) = match p {
                Property::Cograph | Property::Qthreshold => match triple() {
                    Some(t) => (Some(false), Some(WitnessSummary::Triple(t))),
                    None => (Some(true), None),
                },
                Property::Chordal => match config() {
                    Some(cfg) => (Some(false), Some(cfg_summary(cfg))),
                    None => (triple().is_none().then_some(true), None),
                },
                Property::C4free => match config() {
                    Some(cfg) => (Some(false), Some(cfg_summary(cfg))),
                    None => (Some(true), None),
                },
                Property::Diamond | Property::Block => (Some(trivial_meets()), None),
                Property::Threshold => match (triple(), config()) {
                    (Some(t), _) => (Some(false), Some(WitnessSummary::Triple(t))),
                    (None, Some(cfg)) => (Some(false), Some(cfg_summary(cfg))),
                    _ => (None, None),
                },
                Property::Eppo => (Some(c.is_eppo()), None),
            };
            r.group = value;
            if r.witness.is_none() {
                r.witness = w;
            }
        }
        r.millis = t.elapsed().as_millis() as u64;
        properties.push(r);
    }

    let consistent = properties.iter().all(|r| r.agree());
    ClassificationReport {
        spec: a.spec.clone(),
        order: a.group.order(),
        max_cyclics: c.len(),
        cyc: c.cyc().len(),
        maximal_elements: c.maximal_elements().len(),
        simplicial: c.simplicial().len(),
        omega: c.omega(),
        properties,
        consistent,
    }
}

/// Definition-against-catalog identities for a small group.
pub fn cross_validate(a: &Analysis) -> Vec<Check> {
    let mut out = Vec::new();
    let (g, c) = (&a.group, &a.catalog);
    let Some(e) = &a.graph else {
        return out;
    };
    let mut check = |name: &str, f: &dyn Fn() -> bool| {
        let t = Instant::now();
        let pass = f();
        out.push(Check::new(name, CheckRoute::Oracle, pass, t));
    };
    let ids = |v: Vec<usize>| e.elements(&v);

    check("pairwise-oracle", &|| {
        build_enhanced_pairwise(g, c).is_ok_and(|p| p.graph == e.graph)
    });
    check("clique-duality", &|| {
        let mut cliques: Vec<Vec<Id>> = maximal_cliques(&e.graph).into_iter().map(&ids).collect();
        let mut sets: Vec<Vec<Id>> = c
            .subgroups()
            .iter()
            .map(|s| s.members.members().to_vec())
            .collect();
        cliques.sort();
        sets.sort();
        cliques == sets
    });
    check("star-set-is-cyc", &|| {
        ids(e.graph.universal_vertices()) == c.cyc().members()
    });
    check("simplicial-equivalences", &|| {
        let graph_side = ids(e.graph.simplicial_vertices());
        let cyclic_nbhd: Vec<Id> = g
            .ids()
            .filter(|&x| {
                let n = c.closed_neighbourhood(x);
                n.iter().any(|&y| g.cyclic_subgroup(y).members.members() == n.as_slice())
            })
            .collect();
        graph_side == c.simplicial().members() && cyclic_nbhd == graph_side
    });
    check("neighbourhood-is-own-cyclic-iff-maximal", &|| {
        g.ids().all(|x| {
            let own = c.closed_neighbourhood(x) == g.cyclic_subgroup(x).members.members();
            own == c.maximal_elements().contains(x)
        })
    });
    check("maximal-elements-are-simplicial", &|| {
        c.maximal_elements().is_subset(c.simplicial())
    });
    check("noncyclic-has-three-maximal-cyclics", &|| {
        c.is_cyclic_group() == (c.len() == 1) && (c.len() == 1 || c.len() >= 3)
    });
    out
}
