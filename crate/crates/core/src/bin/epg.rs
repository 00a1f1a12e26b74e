use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use epg::epg::{build_enhanced_power_graph, build_power_graph, EpgGraph};
use epg::graph::DENSE_CAP;
use epg::group::{GroupHandle, DEFAULT_CAP};
use epg::lab::{classify, run_suite, write_report, Analysis, Property, Route, Tier};
use epg::Error;

#[derive(Parser)]
#[command(name = "epg", version, about = "Enhanced power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide graph properties and print the report as JSON
    Check {
        expr: String,
        /// Comma-separated list; defaults to every property
        #[arg(long, value_delimiter = ',')]
        props: Vec<Property>,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[arg(long, default_value = "standard")]
        tier: Tier,
    },
    /// Run a verification suite and write its report under reports/
    Verify {
        suite: String,
        #[arg(long, default_value = "standard")]
        tier: Tier,
        #[arg(long, default_value = "reports")]
        dir: PathBuf,
    },
    /// Write the graph of a group to a file
    Export {
        expr: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long, value_enum, default_value = "enhanced")]
        graph: GraphKind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the basic invariants of a group
    Info { expr: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Graph,
    Group,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Enhanced,
    Power,
}

enum Failure {
    Parse(String),
    Build(String),
    Disagreement(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::Semantic(_) | Error::UnknownSpec(_) | Error::UnknownSuite(_) => {
                Failure::Parse(e.to_string())
            }
            Error::DataFile(..) => Failure::Io(e.to_string()),
            _ => Failure::Build(e.to_string()),
        }
    }
}

fn cap() -> usize {
    std::env::var("EPG_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn analyse(expr: &str, tier: Tier) -> Result<Analysis, Failure> {
    Ok(Analysis::build(expr, tier, cap())?)
}

fn check(expr: &str, props: Vec<Property>, route: RouteArg, tier: Tier) -> Result<(), Failure> {
    let a = analyse(expr, tier)?;
    let props = if props.is_empty() {
        Property::ALL.to_vec()
    } else {
        props
    };
    let route = match route {
        RouteArg::Graph => Route::Graph,
        RouteArg::Group => Route::Group,
        RouteArg::Both => Route::Both,
    };
    let r = classify(&a, &props, route);
    println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
    if r.consistent {
        Ok(())
    } else {
        Err(Failure::Disagreement("graph and group routes disagree".into()))
    }
}

fn verify(suite: &str, tier: Tier, dir: &std::path::Path) -> Result<(), Failure> {
    let r = run_suite(suite, tier)?;
    let path = write_report(&r, dir)?;
    println!("{}", path.display());
    let failures = r.failures();
    if failures.is_empty() {
        return Ok(());
    }
    for (spec, name) in &failures {
        eprintln!("FAIL {spec}: {name}");
    }
    Err(Failure::Disagreement(format!("{} failing checks", failures.len())))
}

fn dot(g: &GroupHandle, spec: &str, e: &EpgGraph) -> String {
    let mut s = format!("graph \"{}\" {{\n", spec.replace('"', "\\\""));
    for (&x, l) in e.vertices.iter().zip(&e.labels) {
        let _ = writeln!(s, "  {x} [label=\"{}\", order={}];", g.render(x), l.order);
    }
    for (u, v) in e.graph.edges() {
        let _ = writeln!(s, "  {} -- {};", e.vertices[u], e.vertices[v]);
    }
    s.push_str("}\n");
    s
}

fn edges(e: &EpgGraph) -> String {
    let mut s = String::new();
    for (u, v) in e.graph.edges() {
        let _ = writeln!(s, "{} {}", e.vertices[u], e.vertices[v]);
    }
    s
}

fn json(g: &GroupHandle, spec: &str, e: &EpgGraph) -> String {
    let vertices: Vec<_> = e
        .vertices
        .iter()
        .zip(&e.labels)
        .map(|(&x, l)| {
            serde_json::json!({
                "id": x,
                "order": l.order,
                "membership": l.membership,
                "label": g.render(x),
            })
        })
        .collect();
    let edges: Vec<[u32; 2]> = e
        .graph
        .edges()
        .map(|(u, v)| [e.vertices[u], e.vertices[v]])
        .collect();
    let doc = serde_json::json!({ "spec": spec, "vertices": vertices, "edges": edges });
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

fn export(expr: &str, format: Format, kind: GraphKind, out: &std::path::Path) -> Result<(), Failure> {
    let a = analyse(expr, Tier::Extended)?;
    if a.group.order() > DENSE_CAP {
        return Err(Error::GraphTooLarge {
            vertices: a.group.order(),
            cap: DENSE_CAP,
        }
        .into());
    }
    let e = match kind {
        GraphKind::Enhanced => build_enhanced_power_graph(&a.catalog)?,
        GraphKind::Power => build_power_graph(&a.group, &a.catalog)?,
    };
    let text = match format {
        Format::Dot => dot(&a.group, &a.spec, &e),
        Format::Edges => edges(&e),
        Format::Json => json(&a.group, &a.spec, &e),
    };
    std::fs::write(out, text).map_err(|err| Failure::Io(format!("{}: {err}", out.display())))?;
    println!("{}", out.display());
    Ok(())
}

fn info(expr: &str) -> Result<(), Failure> {
    let a = analyse(expr, Tier::Extended)?;
    let c = &a.catalog;
    let doc = serde_json::json!({
        "spec": a.spec,
        "order": a.group.order(),
        "max_cyclics": c.len(),
        "cyc": c.cyc().len(),
        "maximal_elements": c.maximal_elements().len(),
        "simplicial": c.simplicial().len(),
        "omega": c.omega(),
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("info serializes"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            expr,
            props,
            route,
            tier,
        } => check(&expr, props, route, tier),
        Command::Verify { suite, tier, dir } => verify(&suite, tier, &dir),
        Command::Export {
            expr,
            format,
            graph,
            out,
        } => export(&expr, format, graph, &out),
        Command::Info { expr } => info(&expr),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Parse(m) => (2, m),
                Failure::Build(m) => (3, m),
                Failure::Disagreement(m) => (4, m),
                Failure::Io(m) => (1, m),
            };
            eprintln!("epg: {msg}");
            ExitCode::from(code)
        }
    }
}
