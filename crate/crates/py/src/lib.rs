//! Python bindings: build a group from an expression, query its enhanced
//! power graph and run the verification suites.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use ::epg::epg::{build_enhanced_power_graph, c4_witness_search, w_triple};
use ::epg::expr;
use ::epg::group::DEFAULT_CAP;
use ::epg::lab::{self, Analysis, Property, Route, Tier};
use ::epg::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Syntax { .. } | Error::Semantic(_) | Error::UnknownSpec(_) | Error::UnknownSuite(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn parse_arg<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

/// Round-trips through JSON so nested reports arrive as plain dicts.
fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A finite group together with its maximal cyclic subgroups.
///
///     >>> g = Group("C2 x C2 x C3")
///     >>> g.order, len(g.max_cyclics()), g.omega
///     (12, 3, 6)
#[pyclass(module = "epg", frozen)]
struct Group {
    inner: Analysis,
}

#[pymethods]
impl Group {
    #[new]
    #[pyo3(signature = (spec, tier="extended"))]
    fn new(py: Python<'_>, spec: &str, tier: &str) -> PyResult<Self> {
        let tier: Tier = parse_arg(tier)?;
        let inner = py
            .detach(|| Analysis::build(spec, tier, DEFAULT_CAP))
            .map_err(py_err)?;
        Ok(Group { inner })
    }

    #[getter]
    fn spec(&self) -> &str {
        &self.inner.spec
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.group.order()
    }

    /// Largest element order, which is also the clique number of the graph.
    #[getter]
    fn omega(&self) -> usize {
        self.inner.catalog.omega()
    }

    fn element_order(&self, x: u32) -> PyResult<usize> {
        self.check(x)?;
        Ok(self.inner.group.element_order(x))
    }

    fn render(&self, x: u32) -> PyResult<String> {
        self.check(x)?;
        Ok(self.inner.group.render(x))
    }

    fn mul(&self, x: u32, y: u32) -> PyResult<u32> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.inner.group.mul(x, y))
    }

    /// Element ids of each maximal cyclic subgroup.
    fn max_cyclics(&self) -> Vec<Vec<u32>> {
        self.inner
            .catalog
            .subgroups()
            .iter()
            .map(|h| h.members.members().to_vec())
            .collect()
    }

    fn cyc(&self) -> Vec<u32> {
        self.inner.catalog.cyc().members().to_vec()
    }

    fn simplicial(&self) -> Vec<u32> {
        self.inner.catalog.simplicial().members().to_vec()
    }

    fn maximal_elements(&self) -> Vec<u32> {
        self.inner.catalog.maximal_elements().members().to_vec()
    }

    /// Whether `<x, y>` is cyclic.
    fn adjacent(&self, x: u32, y: u32) -> PyResult<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x != y && self.inner.catalog.adjacent(x, y))
    }

    /// Edge list of the enhanced power graph, as pairs of element ids.
    fn edges(&self, py: Python<'_>) -> PyResult<Vec<(u32, u32)>> {
        let c = &self.inner.catalog;
        let e = py.detach(|| build_enhanced_power_graph(c)).map_err(py_err)?;
        Ok(e.graph
            .edges()
            .map(|(u, v)| (e.vertices[u], e.vertices[v]))
            .collect())
    }

    /// Decides the requested properties; returns the report as a dict.
    #[pyo3(signature = (props=None, route="both"))]
    fn classify(&self, py: Python<'_>, props: Option<Vec<String>>, route: &str) -> PyResult<Py<PyAny>> {
        let props: Vec<Property> = match props {
            Some(ps) => ps.iter().map(|p| parse_arg(p)).collect::<PyResult<_>>()?,
            None => Property::ALL.to_vec(),
        };
        let route = match route {
            "graph" => Route::Graph,
            "group" => Route::Group,
            "both" => Route::Both,
            _ => return Err(PyValueError::new_err(format!("unknown route `{route}`"))),
        };
        let r = lab::classify(&self.inner, &props, route);
        to_py(py, &r)
    }

    /// Three maximal cyclics whose intersections are incomparable, if any.
    fn w_triple(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        w_triple(&self.inner.catalog).map(|t| to_py(py, &t)).transpose()
    }

    /// An induced 4-cycle `(a1, b1, a2, b2)` from the configuration search.
    fn c4_witness(&self) -> Option<(u32, u32, u32, u32)> {
        let g = &self.inner;
        c4_witness_search(&g.group, &g.catalog).map(|c| {
            let [a, b, c, d] = c.cycle();
            (a, b, c, d)
        })
    }

    fn __len__(&self) -> usize {
        self.order()
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.inner.spec, self.order())
    }
}

impl Group {
    fn check(&self, x: u32) -> PyResult<()> {
        if (x as usize) < self.inner.group.order() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!("no element with id {x}")))
        }
    }
}

/// Canonical form of a group expression.
#[pyfunction]
fn parse(text: &str) -> PyResult<String> {
    expr::parse(text).map(|e| e.to_string()).map_err(py_err)
}

#[pyfunction]
fn suites() -> Vec<&'static str> {
    lab::SUITES.to_vec()
}

#[pyfunction]
#[pyo3(signature = (name, tier="fast"))]
fn run_suite(py: Python<'_>, name: &str, tier: &str) -> PyResult<Py<PyAny>> {
    let tier: Tier = parse_arg(tier)?;
    let report = py.detach(|| lab::run_suite(name, tier)).map_err(py_err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "epg")]
pub fn epg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
