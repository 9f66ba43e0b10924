//! Python module `clique_homotopy`: graphs, clique graphs, Helly tests,
//! homology signatures, reductions and per-graph verification.

use clique_homotopy::cliques::{self, IterationStatus};
use clique_homotopy::graph::{self as g, IsoVerdict};
use clique_homotopy::harness::{self, Check, VerifyOptions};
use clique_homotopy::homology::{self, DEFAULT_SIMPLEX_BUDGET};
use clique_homotopy::reduce;
use clique_homotopy::{Error, Graph};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::SimplexBudgetExceeded { .. } | Error::CliqueBudgetExceeded { .. } | Error::InvariantViolation(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(module = "clique_homotopy", name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Graph,
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(n, &edges).map(Self::from).map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        g::parse_graph6(text.trim()).map(Self::from).map_err(to_py)
    }

    /// DIMACS `p edge` text with 1-based vertices.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        g::parse_edge_list(text).map(Self::from).map_err(to_py)
    }

    fn to_graph6(&self) -> String {
        g::emit_graph6(&self.inner)
    }

    fn to_edge_list(&self) -> String {
        g::emit_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(to_py(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_low_degree(&self) -> bool {
        self.inner.is_low_degree()
    }

    /// `k` when the graph is the octahedron `O_k`, else `None`.
    fn octahedron_order(&self) -> Option<usize> {
        self.inner.octahedron_order()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, graph6={:?})",
            self.inner.n(),
            self.inner.edge_count(),
            self.to_graph6()
        )
    }
}

#[pyfunction]
fn gen_octahedron(k: usize) -> PyResult<PyGraph> {
    g::gen_octahedron(k).map(PyGraph::from).map_err(to_py)
}

#[pyfunction]
fn gen_cycle(k: usize) -> PyResult<PyGraph> {
    g::gen_cycle(k).map(PyGraph::from).map_err(to_py)
}

#[pyfunction]
fn gen_path(k: usize) -> PyResult<PyGraph> {
    g::gen_path(k).map(PyGraph::from).map_err(to_py)
}

#[pyfunction]
fn gen_complete(k: usize) -> PyResult<PyGraph> {
    g::gen_complete(k).map(PyGraph::from).map_err(to_py)
}

#[pyfunction]
fn gen_sun3() -> PyGraph {
    g::gen_sun3().into()
}

/// Maximal cliques as sorted vertex lists, in lexicographic order.
#[pyfunction]
fn maximal_cliques(graph: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    let cl = cliques::maximal_cliques(&graph.inner).map_err(to_py)?;
    Ok(cl.iter().map(|q| q.to_vec()).collect())
}

/// `(K(G), labels)` where `labels[i]` is the clique of `G` behind vertex `i`.
#[pyfunction]
fn clique_graph(graph: &PyGraph) -> PyResult<(PyGraph, Vec<Vec<usize>>)> {
    let r = cliques::clique_graph(&graph.inner).map_err(to_py)?;
    let labels = r.labels.iter().map(|q| q.to_vec()).collect();
    Ok((r.kg.into(), labels))
}

/// Sizes of `K^0(G), …` and how the iteration ended.
#[pyfunction]
#[pyo3(signature = (graph, steps, max_vertices = 100_000))]
fn iterate_clique_graph<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    steps: usize,
    max_vertices: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let out = py
        .detach(|| cliques::iterate_clique_graph(&graph.inner, steps, max_vertices))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("sizes", &out.sizes)?;
    let orders: Vec<Option<usize>> = out
        .graphs
        .iter()
        .map(|k| k.as_ref().and_then(Graph::octahedron_order))
        .collect();
    d.set_item("octahedron_orders", orders)?;
    match out.status {
        IterationStatus::Completed(s) => {
            d.set_item("status", "completed")?;
            d.set_item("step", s)?;
        }
        IterationStatus::FixedPointDetected(s) => {
            d.set_item("status", "fixed_point")?;
            d.set_item("step", s)?;
        }
        IterationStatus::BudgetExceeded {
            step,
            vertices_at_least,
        } => {
            d.set_item("status", "budget_exceeded")?;
            d.set_item("step", step)?;
            d.set_item("vertices_at_least", vertices_at_least)?;
        }
    }
    Ok(d)
}

#[pyfunction]
fn is_helly(graph: &PyGraph) -> PyResult<bool> {
    cliques::is_helly(&graph.inner).map(|r| r.helly).map_err(to_py)
}

#[pyfunction]
fn is_isomorphic(a: &PyGraph, b: &PyGraph) -> PyResult<bool> {
    g::is_isomorphic(&a.inner, &b.inner).map_err(to_py)
}

/// Compares graphs of any size: `(verdict, method)` with verdict one of
/// "isomorphic", "not_isomorphic", "undetermined".
#[pyfunction]
fn compare_graphs(a: &PyGraph, b: &PyGraph) -> (&'static str, &'static str) {
    let (v, how) = g::compare_graphs(&a.inner, &b.inner);
    let v = match v {
        IsoVerdict::Isomorphic => "isomorphic",
        IsoVerdict::NotIsomorphic => "not_isomorphic",
        IsoVerdict::Undetermined => "undetermined",
    };
    (v, how)
}

/// `(euler_characteristic, betti)` of the clique complex over GF(2).
#[pyfunction]
#[pyo3(signature = (graph, budget = DEFAULT_SIMPLEX_BUDGET))]
fn homotopy_signature(py: Python<'_>, graph: &PyGraph, budget: usize) -> PyResult<(i64, Vec<usize>)> {
    let s = py
        .detach(|| homology::homotopy_signature_with_budget(&graph.inner, budget))
        .map_err(to_py)?;
    Ok((s.euler, s.betti))
}

/// `(triangle_free_graph, wedge_count, trace_text)`.
#[pyfunction]
fn low_degree_reduce(graph: &PyGraph) -> PyResult<(PyGraph, usize, String)> {
    let r = reduce::low_degree_reduce(&graph.inner).map_err(to_py)?;
    Ok((r.triangle_free.into(), r.wedge_count, r.trace.to_text()))
}

/// `(core, dismantlable)` after greedy dominated vertex removal.
#[pyfunction]
fn dismantle(graph: &PyGraph) -> PyResult<(PyGraph, bool)> {
    let d = reduce::dismantle(&graph.inner).map_err(to_py)?;
    Ok((d.core.into(), d.dismantlable))
}

/// Runs the named checks (all by default) and returns the JSON record.
#[pyfunction]
#[pyo3(signature = (graph, checks = None))]
fn verify_graph(py: Python<'_>, graph: &PyGraph, checks: Option<Vec<String>>) -> PyResult<String> {
    let checks: Vec<Check> = match checks {
        None => Check::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| Check::from_name(n).ok_or_else(|| PyValueError::new_err(format!("unknown check {n:?}"))))
            .collect::<PyResult<_>>()?,
    };
    let opts = VerifyOptions {
        record_timings: false,
        ..VerifyOptions::default()
    };
    Ok(py.detach(|| harness::verify_graph(&graph.inner, &checks, &opts).to_json_line()))
}

#[pymodule]
#[pyo3(name = "clique_homotopy")]
fn clique_homotopy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gen_octahedron, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_path, m)?)?;
    m.add_function(wrap_pyfunction!(gen_complete, m)?)?;
    m.add_function(wrap_pyfunction!(gen_sun3, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(clique_graph, m)?)?;
    m.add_function(wrap_pyfunction!(iterate_clique_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_helly, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(compare_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(homotopy_signature, m)?)?;
    m.add_function(wrap_pyfunction!(low_degree_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(dismantle, m)?)?;
    m.add_function(wrap_pyfunction!(verify_graph, m)?)?;
    Ok(())
}
