//! Python module `turanlab_py`.
//!
//! Graphs are `Graph` objects; forbidden families are lists of pattern
//! strings such as `"clique:3"` or `"family:icosa"`. Searches that take a
//! `budget_ms` report `"undecided"` once it is spent.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use turanlab::budget::Budget;
use turanlab::canon::{certificate, is_isomorphic};
use turanlab::construct::parse_expr;
use turanlab::decomposition::{covering_family as covering, decomposition_family};
use turanlab::extremal::{self, enumerate_extremal_with, path_extremal_oracle, Method};
use turanlab::family::{is_family_free, ForbiddenFamily, Freeness};
use turanlab::invariants;
use turanlab::pattern::{parse_family, parse_pattern};
use turanlab::suite::{run_suite as run, SuiteOptions};
use turanlab::symmetry::{self, ShapeCertificate, SymmetricFamily};
use turanlab::{Outcome, MAX_ORDER};

fn err(e: turanlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget(ms: Option<u64>) -> Budget {
    ms.map_or_else(Budget::unlimited, Budget::millis)
}

fn family(patterns: Vec<String>) -> PyResult<ForbiddenFamily> {
    parse_family(&patterns).map_err(err)
}

fn status<T>(o: &Outcome<T>) -> &'static str {
    match o {
        Outcome::Found(_) => "found",
        Outcome::Absent => "absent",
        Outcome::Undecided => "undecided",
    }
}

/// A simple graph on at most 64 vertices.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(turanlab::Graph);

impl PyGraph {
    fn vertex(&self, v: usize) -> PyResult<usize> {
        if v < self.0.order() {
            Ok(v)
        } else {
            Err(PyValueError::new_err(format!("vertex {v} out of range for {} vertices", self.0.order())))
        }
    }
}

#[pymethods]
impl PyGraph {
    /// `Graph(n, edges=[])`.
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        turanlab::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        turanlab::parse_graph6(s).map(PyGraph).map_err(|e| err(e.into()))
    }

    /// A construction expression such as `join(K(2),T(12,3))`.
    #[staticmethod]
    fn from_expr(s: &str) -> PyResult<Self> {
        parse_expr(s).and_then(|e| e.eval()).map(PyGraph).map_err(err)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        Ok(self.0.has_edge(self.vertex(u)?, self.vertex(v)?))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        let v = self.vertex(v)?;
        Ok((0..self.0.order()).filter(|&u| self.0.has_edge(u, v)).collect())
    }

    fn degrees(&self) -> Vec<usize> {
        self.0.degrees()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }

    /// graph6 string of the canonical labelling.
    fn certificate(&self) -> String {
        certificate(&self.0)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        is_isomorphic(&self.0, &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={}, graph6={:?})", self.0.order(), self.0.edge_count(), self.0.to_graph6())
    }
}

/// Evaluates a construction expression.
#[pyfunction]
fn construct(expr: &str) -> PyResult<PyGraph> {
    PyGraph::from_expr(expr)
}

/// `(label, Graph)` pairs described by a pattern.
#[pyfunction]
fn pattern(text: &str) -> PyResult<Vec<(String, PyGraph)>> {
    Ok(parse_pattern(text).map_err(err)?.into_iter().map(|(l, g)| (l, PyGraph(g))).collect())
}

/// Host images of the pattern's vertices, or `None`.
#[pyfunction]
fn contains_subgraph(host: &PyGraph, pattern: &PyGraph) -> Option<Vec<usize>> {
    turanlab::contains_subgraph(&host.0, &pattern.0)
}

/// `{"status": "free" | "contains" | "undecided", "member", "witness"}`.
#[pyfunction]
#[pyo3(signature = (host, forbid, budget_ms = None))]
fn check<'py>(py: Python<'py>, host: &PyGraph, forbid: Vec<String>, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let fam = family(forbid)?;
    let d = PyDict::new(py);
    match is_family_free(&host.0, &fam, budget(budget_ms)) {
        Freeness::Free => d.set_item("status", "free")?,
        Freeness::Contains { member, witness } => {
            d.set_item("status", "contains")?;
            d.set_item("member", &fam.labels()[member])?;
            d.set_item("witness", witness)?;
        }
        Freeness::Undecided { member } => {
            d.set_item("status", "undecided")?;
            d.set_item("member", &fam.labels()[member])?;
        }
    }
    Ok(d)
}

#[pyfunction(name = "invariants")]
fn graph_invariants<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let g = &g.0;
    let d = PyDict::new(py);
    d.set_item("order", g.order())?;
    d.set_item("edges", g.edge_count())?;
    d.set_item("clique_number", invariants::clique_number(g))?;
    d.set_item("chromatic_number", invariants::chromatic_number(g))?;
    d.set_item("independence_number", invariants::independence_number(g))?;
    d.set_item("covering_number", invariants::covering_number(g))?;
    d.set_item("connected", g.is_connected())?;
    d.set_item("bipartite", g.is_bipartite())?;
    d.set_item("independent_covering_order", invariants::independent_covering_order(g).ok())?;
    Ok(d)
}

/// `r`, `t` and `q` of a family.
#[pyfunction]
fn family_parameters(forbid: Vec<String>) -> PyResult<(usize, usize, usize)> {
    let fam = family(forbid)?;
    Ok((fam.r(), fam.t(), fam.q()))
}

/// `{"n", "ex", "graphs", "graphs_examined", "method"}`; graphs are
/// canonical graph6 strings.
#[pyfunction]
#[pyo3(signature = (n, forbid, method = "exhaustive"))]
fn extremal_graphs<'py>(py: Python<'py>, n: usize, forbid: Vec<String>, method: &str) -> PyResult<Bound<'py, PyDict>> {
    let fam = family(forbid)?;
    let method = match method {
        "exhaustive" => Method::Exhaustive,
        "labeled-bruteforce" => Method::LabeledBruteForce,
        other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
    };
    let rep = enumerate_extremal_with(n, &fam, method).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("n", rep.n)?;
    d.set_item("ex", rep.ex)?;
    d.set_item("graphs", rep.graphs)?;
    d.set_item("graphs_examined", rep.graphs_examined)?;
    d.set_item("method", rep.method.to_string())?;
    Ok(d)
}

/// `(ex, graphs)` for the path on `l` vertices.
#[pyfunction]
fn path_extremal(n: usize, l: usize) -> PyResult<(usize, Vec<PyGraph>)> {
    let p = path_extremal_oracle(n, l).map_err(err)?;
    Ok((p.ex, p.graphs.into_iter().map(PyGraph).collect()))
}

#[pyfunction]
fn symmetric_vertices(g: &PyGraph) -> Vec<Vec<usize>> {
    symmetry::find_symmetric_vertices(&g.0)
}

/// `{"status", "blocks", "isos"}` for the largest family of order-`k`
/// blocks with at least `tau_min` members.
#[pyfunction]
#[pyo3(signature = (g, k, tau_min = 2, budget_ms = None))]
fn symmetric_family<'py>(
    py: Python<'py>,
    g: &PyGraph,
    k: usize,
    tau_min: usize,
    budget_ms: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let out = symmetry::find_symmetric_families(&g.0, k, tau_min, budget(budget_ms)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("status", status(&out))?;
    if let Outcome::Found(fam) = out {
        d.set_item("blocks", fam.blocks)?;
        d.set_item("isos", fam.isos)?;
    }
    Ok(d)
}

fn symmetric(host: &PyGraph, blocks: Vec<Vec<usize>>, isos: Option<Vec<Vec<usize>>>) -> SymmetricFamily {
    let isos = isos.unwrap_or_else(|| blocks.get(1..).unwrap_or_default().to_vec());
    SymmetricFamily { host: host.0.clone(), blocks, isos }
}

/// Adds a copy of the first block; `isos` default to matching positions.
#[pyfunction]
#[pyo3(signature = (host, blocks, isos = None))]
fn replicate(host: &PyGraph, blocks: Vec<Vec<usize>>, isos: Option<Vec<Vec<usize>>>) -> PyResult<PyGraph> {
    symmetry::replicate(&symmetric(host, blocks, isos)).map(PyGraph).map_err(err)
}

/// Branch name for a symmetric configuration in a `P_l`-free graph:
/// `"clique-blocks"`, `"apexed"` (with apexes), `"neither"` or
/// `"hypothesis-not-met"` (with the reason).
#[pyfunction]
#[pyo3(signature = (host, blocks, l, isos = None))]
fn dichotomy(host: &PyGraph, blocks: Vec<Vec<usize>>, l: usize, isos: Option<Vec<Vec<usize>>>) -> PyResult<(String, Vec<usize>, String)> {
    Ok(match symmetry::classify_dichotomy(&symmetric(host, blocks, isos), l).map_err(err)? {
        symmetry::Dichotomy::CliqueBlocks => ("clique-blocks".into(), vec![], String::new()),
        symmetry::Dichotomy::Apexed { apexes } => ("apexed".into(), apexes, String::new()),
        symmetry::Dichotomy::Neither => ("neither".into(), vec![], String::new()),
        symmetry::Dichotomy::HypothesisNotMet(why) => ("hypothesis-not-met".into(), vec![], why),
    })
}

fn shape_dict<'py>(py: Python<'py>, c: &ShapeCertificate) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("w", c.w.clone())?;
    d.set_item("parts", c.parts.clone())?;
    d.set_item("cores", c.cores.clone())?;
    Ok(d)
}

fn shape_from(w: Vec<usize>, parts: Vec<Vec<usize>>, cores: Vec<Vec<usize>>) -> ShapeCertificate {
    ShapeCertificate { w, parts, cores }
}

/// `{"w", "parts", "cores"}` or `None`.
#[pyfunction]
fn verify_shape<'py>(py: Python<'py>, g: &PyGraph, q: usize, r: usize, t: usize) -> PyResult<Option<Bound<'py, PyDict>>> {
    symmetry::verify_extremal_shape(&g.0, q, r, t).map(|c| shape_dict(py, &c)).transpose()
}

/// Applies `D` to a shaped graph; returns the new graph and certificate.
#[pyfunction]
fn d_operation<'py>(
    py: Python<'py>,
    g: &PyGraph,
    w: Vec<usize>,
    parts: Vec<Vec<usize>>,
    cores: Vec<Vec<usize>>,
) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let (h, c) = extremal::d_operation(&g.0, &shape_from(w, parts, cores)).map_err(err)?;
    Ok((PyGraph(h), shape_dict(py, &c)?))
}

#[pyfunction]
fn d_inverse<'py>(
    py: Python<'py>,
    g: &PyGraph,
    w: Vec<usize>,
    parts: Vec<Vec<usize>>,
    cores: Vec<Vec<usize>>,
) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let (h, c) = extremal::d_inverse(&g.0, &shape_from(w, parts, cores)).map_err(err)?;
    Ok((PyGraph(h), shape_dict(py, &c)?))
}

/// `{"status", "omitted", "parts"}` for membership in the symmetric class.
#[pyfunction]
#[pyo3(signature = (g, r, c, budget_ms = None))]
fn in_symmetry_class<'py>(py: Python<'py>, g: &PyGraph, r: usize, c: usize, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let out = symmetry::in_symmetry_class(&g.0, r, c, budget(budget_ms)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("status", status(&out))?;
    if let Outcome::Found(cert) = out {
        d.set_item("omitted", cert.omitted)?;
        d.set_item("parts", cert.parts)?;
    }
    Ok(d)
}

/// `{"members", "complete", "undecided", "has_bipartite"}`.
#[pyfunction]
#[pyo3(signature = (forbid, bound = None, budget_ms = None))]
fn decomposition<'py>(py: Python<'py>, forbid: Vec<String>, bound: Option<usize>, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let fam = family(forbid)?;
    let res = decomposition_family(&fam, bound, budget(budget_ms)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("members", res.members.into_iter().map(PyGraph).collect::<Vec<_>>())?;
    d.set_item("search_bound", res.search_bound)?;
    d.set_item("complete", res.complete)?;
    d.set_item("undecided", res.undecided)?;
    d.set_item("has_bipartite", res.has_bipartite)?;
    Ok(d)
}

#[pyfunction]
fn covering_family(forbid: Vec<String>) -> PyResult<Vec<PyGraph>> {
    Ok(covering(&family(forbid)?).map_err(err)?.into_iter().map(PyGraph).collect())
}

/// `(status, name, detail)` triples of a verify suite.
#[pyfunction]
#[pyo3(signature = (name, nmax = 8, seed = 0, cases = None))]
fn run_suite(name: &str, nmax: usize, seed: u64, cases: Option<usize>) -> PyResult<Vec<(String, String, String)>> {
    let rep = run(name, &SuiteOptions { nmax, seed, cases }).map_err(err)?;
    Ok(rep.checks.into_iter().map(|c| (c.status.to_string(), c.name, c.detail)).collect())
}

#[pymodule]
fn turanlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MAX_ORDER", MAX_ORDER)?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(pattern, m)?)?;
    m.add_function(wrap_pyfunction!(contains_subgraph, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(graph_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(family_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(path_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_family, m)?)?;
    m.add_function(wrap_pyfunction!(replicate, m)?)?;
    m.add_function(wrap_pyfunction!(dichotomy, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shape, m)?)?;
    m.add_function(wrap_pyfunction!(d_operation, m)?)?;
    m.add_function(wrap_pyfunction!(d_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(in_symmetry_class, m)?)?;
    m.add_function(wrap_pyfunction!(decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(covering_family, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
