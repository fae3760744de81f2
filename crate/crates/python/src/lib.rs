//! Python bindings. Vertex sets cross the boundary as lists of 0-indexed
//! vertices; counts are Python ints of arbitrary size.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use domreconf_core as core;
use domreconf_core::census;
use domreconf_core::reconfig::{self, Diameter, DsrQuery};
use domreconf_core::VertexSet;

create_exception!(domreconf, DomreconfError, PyException);

fn err(e: core::Error) -> PyErr {
    DomreconfError::new_err(e.to_string())
}

fn to_set(g: &core::Graph, vertices: Vec<usize>) -> PyResult<VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
        return Err(err(core::Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }));
    }
    Ok(vertices.into_iter().collect())
}

#[pyclass(name = "Graph", module = "domreconf", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: core::Graph,
}

fn wrap(inner: core::Graph) -> PyGraph {
    PyGraph { inner }
}

#[pymethods]
impl PyGraph {
    /// Graph on `n` vertices with the given edges.
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::from_edge_list(n, &edges)
            .map(wrap)
            .map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        core::formats::parse_graph6(text).map(wrap).map_err(err)
    }

    /// Family spec such as `cycle:5` or `corona(path:3,complete:1)`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        core::family::parse_family_spec(spec).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        core::Graph::path(n).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        core::Graph::cycle(n).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        core::Graph::complete(n).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        core::Graph::star(n).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn hypercube(dim: usize) -> PyResult<Self> {
        core::Graph::hypercube(dim).map(wrap).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn graph6(&self) -> String {
        core::formats::to_graph6(&self.inner)
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        self.inner.join(&other.inner).map(wrap).map_err(err)
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyResult<Self> {
        self.inner
            .disjoint_union(&other.inner)
            .map(wrap)
            .map_err(err)
    }

    fn corona(&self, other: &PyGraph) -> PyResult<Self> {
        self.inner.corona(&other.inner).map(wrap).map_err(err)
    }

    /// `perm[v]` is the new name of vertex `v`.
    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.relabel(&perm).map(wrap).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.graph6())
    }
}

#[pyclass(name = "DominatingGraph", module = "domreconf", frozen)]
struct PyDominatingGraph {
    inner: reconfig::DominatingGraph,
}

#[pymethods]
impl PyDominatingGraph {
    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    /// Dominating sets in canonical order (size, then bitmask).
    fn vertex_sets(&self) -> Vec<Vec<usize>> {
        self.inner
            .vertex_sets()
            .iter()
            .map(|s| s.to_vec())
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, i: usize) -> PyResult<usize> {
        if i >= self.inner.num_vertices() {
            return Err(DomreconfError::new_err(format!(
                "vertex index {i} out of range"
            )));
        }
        Ok(self.inner.degree(i))
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(err)
    }

    fn num_components(&self) -> PyResult<usize> {
        self.inner.num_components().map_err(err)
    }

    /// `None` when disconnected.
    fn diameter(&self) -> PyResult<Option<usize>> {
        Ok(match self.inner.diameter().map_err(err)? {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        })
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_hamiltonian(&self) -> PyResult<bool> {
        self.inner.is_hamiltonian().map_err(err)
    }

    fn to_graph(&self) -> PyResult<PyGraph> {
        self.inner.to_graph().map(wrap).map_err(err)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.num_vertices()
    }

    fn __repr__(&self) -> String {
        format!(
            "<DominatingGraph k={} vertices={} edges={}>",
            self.inner.k(),
            self.inner.num_vertices(),
            self.inner.num_edges()
        )
    }
}

#[pyfunction]
fn dominating_graph(g: &PyGraph, k: usize) -> PyResult<PyDominatingGraph> {
    reconfig::build_dominating_graph(&g.inner, k)
        .map(|inner| PyDominatingGraph { inner })
        .map_err(err)
}

#[pyfunction]
fn is_dominating(g: &PyGraph, vertices: Vec<usize>) -> PyResult<bool> {
    core::domination::is_dominating(&g.inner, to_set(&g.inner, vertices)?).map_err(err)
}

#[pyfunction]
fn domination_number(g: &PyGraph) -> usize {
    core::domination::domination_number(&g.inner)
}

#[pyfunction]
fn upper_domination_number(g: &PyGraph) -> PyResult<usize> {
    core::domination::upper_domination_number(&g.inner).map_err(err)
}

#[pyfunction]
fn dominating_sets(g: &PyGraph, k: usize) -> PyResult<Vec<Vec<usize>>> {
    let sets = core::domination::enumerate_dominating_sets(&g.inner, k).map_err(err)?;
    Ok(sets.into_iter().map(VertexSet::to_vec).collect())
}

/// Coefficients `[d_0, d_1, ..., d_n]`.
#[pyfunction]
fn domination_polynomial(g: &PyGraph) -> PyResult<Vec<BigUint>> {
    let p = core::domination::domination_polynomial(&g.inner).map_err(err)?;
    Ok(p.coefficients().to_vec())
}

#[pyfunction]
fn count_dominating_sets(g: &PyGraph) -> PyResult<BigUint> {
    core::domination::count_dominating_sets(&g.inner).map_err(err)
}

#[pyfunction]
fn cycle_dominating_count(n: usize) -> PyResult<BigUint> {
    core::domination::cycle_dominating_count(n).map_err(err)
}

/// Shortest reconfiguration sequence from `start` to `goal` in `D_k(g)`, or
/// `None` when unreachable.
#[pyfunction]
fn dsr(
    g: &PyGraph,
    start: Vec<usize>,
    goal: Vec<usize>,
    k: usize,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let q = DsrQuery {
        graph: &g.inner,
        start: to_set(&g.inner, start)?,
        goal: to_set(&g.inner, goal)?,
        k,
    };
    let res = reconfig::dsr_reachable(&q).map_err(err)?;
    Ok(res
        .path
        .map(|p| p.into_iter().map(VertexSet::to_vec).collect()))
}

#[pyfunction]
fn is_isomorphic(g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    core::iso::is_isomorphic(&g.inner, &h.inner).map_err(err)
}

/// Canonical certificate as a hex string.
#[pyfunction]
fn canonical_form(g: &PyGraph) -> PyResult<String> {
    core::iso::canonical_form(&g.inner)
        .map(|c| c.to_hex())
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, connected = false, isolate_free = false))]
fn generate_graphs(n: usize, connected: bool, isolate_free: bool) -> PyResult<Vec<PyGraph>> {
    let filter = core::gen::GraphClassFilter {
        order: n,
        connected,
        min_degree_at_least: usize::from(isolate_free),
    };
    Ok(core::gen::generate_graphs(filter)
        .map_err(err)?
        .map(wrap)
        .collect())
}

/// Runs a named claim check and returns its report as JSON.
#[pyfunction]
#[pyo3(signature = (claim, n_max = None, r = 2, allow_isolates = false))]
fn run_census(
    claim: &str,
    n_max: Option<usize>,
    r: usize,
    allow_isolates: bool,
) -> PyResult<String> {
    let n = |default| n_max.unwrap_or(default);
    let report = match claim {
        "basic" => census::verify_basic_properties(n(6)),
        "self-iso" => census::self_isomorphism_census(n(6)),
        "regular" => {
            census::regular_census_with(r, census::RegularCensusOptions { allow_isolates })
                .map(|(_, report)| report)
        }
        "path" => census::path_census(),
        "disconnected" => census::disconnected_examples_check(),
        "connectivity" => census::connectivity_threshold_census(n(6)),
        "star-connectivity" => census::star_connectivity_check(4, n(8)),
        "degree-law" => census::degree_law_census(n(6)),
        "odd-order" => census::odd_order_census(n(6)),
        other => return Err(DomreconfError::new_err(format!("unknown claim `{other}`"))),
    };
    report.map(|r| r.to_json()).map_err(err)
}

#[pymodule]
fn domreconf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DomreconfError", m.py().get_type::<DomreconfError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDominatingGraph>()?;
    m.add_function(wrap_pyfunction!(dominating_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_dominating, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(upper_domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(dominating_sets, m)?)?;
    m.add_function(wrap_pyfunction!(domination_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(count_dominating_sets, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_dominating_count, m)?)?;
    m.add_function(wrap_pyfunction!(dsr, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(generate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(run_census, m)?)?;
    Ok(())
}
