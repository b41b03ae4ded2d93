//! Python bindings: the `connset` extension module.
//!
//! Counts come back as Python `int` and averages as `fractions.Fraction`,
//! so nothing is rounded on the way across.

use connset_core::generators::{self, FamilySpec, FamilyTemplate};
use connset_core::io::{encode_graph6, parse_edge_list, parse_graph6};
use connset_core::theorems::{self, RootSearch};
use connset_core::{engine, Budget, Error, VertexSet, DEFAULT_BUDGET};
use pyo3::create_exception;
use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

create_exception!(
    connset,
    BudgetExceeded,
    PyRuntimeError,
    "The work budget ran out."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        Error::UnknownStatement(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "connset", eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: connset_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = connset_core::Graph::from_edges(n, edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = parse_graph6(text.trim().as_bytes()).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_edge_list(text).map_err(to_py)?,
        })
    }

    fn graph6(&self) -> String {
        encode_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", encode_graph6(&self.inner))
    }
}

fn stats_dict<'py>(py: Python<'py>, s: engine::ConnStats) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", s.n)?;
    d.set_item("N", s.count)?;
    d.set_item("S", s.total_size)?;
    d.set_item("A", s.average)?;
    d.set_item("D", s.density)?;
    Ok(d)
}

/// `{"n", "N", "S", "A", "D"}` for a connected graph.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn stats<'py>(py: Python<'py>, g: &PyGraph, budget: u64) -> PyResult<Bound<'py, PyDict>> {
    stats_dict(
        py,
        engine::stats(&g.inner, &Budget::new(budget)).map_err(to_py)?,
    )
}

/// Subset enumeration; accepts disconnected graphs.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn stats_bruteforce<'py>(
    py: Python<'py>,
    g: &PyGraph,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    stats_dict(
        py,
        engine::stats_bruteforce(&g.inner, &Budget::new(budget)).map_err(to_py)?,
    )
}

/// Counts over connected sets containing every vertex of `root`.
#[pyfunction]
#[pyo3(signature = (g, root, budget = DEFAULT_BUDGET))]
fn rooted_stats<'py>(
    py: Python<'py>,
    g: &PyGraph,
    root: Vec<usize>,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let root: VertexSet = root.into_iter().collect();
    let r = engine::rooted_stats(&g.inner, &root, &Budget::new(budget)).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("root", r.root.as_slice().to_vec())?;
    d.set_item("N", r.count)?;
    d.set_item("S", r.total_size)?;
    d.set_item("A", r.average)?;
    Ok(d)
}

/// `N(G,x)` for every vertex.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn vertex_profile(g: &PyGraph, budget: u64) -> PyResult<Vec<num_bigint::BigUint>> {
    engine::vertex_profile(&g.inner, &Budget::new(budget)).map_err(to_py)
}

#[pyfunction]
fn block_cut_tree<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let t = connset_core::block_cut_tree(&g.inner).map_err(to_py)?;
    let d = PyDict::new(py);
    let blocks: Vec<Vec<usize>> = t.blocks.iter().map(|b| b.as_slice().to_vec()).collect();
    d.set_item("blocks", blocks)?;
    d.set_item("cut_vertices", t.cut_vertices.as_slice().to_vec())?;
    Ok(d)
}

#[pyfunction]
fn classify_near_tree(g: &PyGraph) -> PyResult<&'static str> {
    Ok(connset_core::classify_near_tree(&g.inner)
        .map_err(to_py)?
        .as_str())
}

/// Average path length over the minimal sets rooted at `x`, or `None`
/// when `G - x` is empty.
#[pyfunction]
#[pyo3(signature = (g, x, budget = DEFAULT_BUDGET))]
fn av(g: &PyGraph, x: usize, budget: u64) -> PyResult<Option<num_rational::BigRational>> {
    let fam = connset_core::minimal_family(&g.inner, x, &Budget::new(budget)).map_err(to_py)?;
    Ok(fam.av)
}

/// Smallest cut vertex satisfying the root-vertex inequality.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn find_root_vertex(g: &PyGraph, budget: u64) -> PyResult<Option<usize>> {
    let r: RootSearch =
        theorems::find_root_vertex(&g.inner, &Budget::new(budget)).map_err(to_py)?;
    Ok(r.root())
}

#[pyfunction]
fn is_cograph(g: &PyGraph) -> bool {
    theorems::is_cograph(&g.inner)
}

/// Builds one family member, e.g. `generate("baton:L=6,k=4")`.
#[pyfunction]
fn generate(spec: &str) -> PyResult<PyGraph> {
    let spec = FamilySpec::parse(spec).map_err(to_py)?;
    Ok(PyGraph {
        inner: generators::generate(&spec).map_err(to_py)?,
    })
}

/// Every member of a template such as `"path:n=3..6"`, as `(label, graph)`.
#[pyfunction]
fn family(template: &str) -> PyResult<Vec<(String, PyGraph)>> {
    let t = FamilyTemplate::parse(template).map_err(to_py)?;
    generators::family_stream(&t)
        .map(|r| {
            r.map(|(s, g)| (s.to_string(), PyGraph { inner: g }))
                .map_err(to_py)
        })
        .collect()
}

/// Runs statements over graphs; returns one dict per result.
#[pyfunction]
#[pyo3(signature = (graphs, statements = vec!["all".to_string()], budget = DEFAULT_BUDGET, workers = 1))]
fn verify<'py>(
    py: Python<'py>,
    graphs: Vec<PyGraph>,
    statements: Vec<String>,
    budget: u64,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let graphs: Vec<_> = graphs.into_iter().map(|g| g.inner).collect();
    let results =
        theorems::run_statement_suite(graphs, &statements, budget, workers).map_err(to_py)?;
    let text =
        serde_json::to_string(&results).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Ids of the known statements.
#[pyfunction]
fn statements<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
    let reg = theorems::StatementRegistry::standard();
    PyList::new(py, reg.list().iter().map(|s| s.id))
}

#[pymodule]
fn connset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(stats_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_stats, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_profile, m)?)?;
    m.add_function(wrap_pyfunction!(block_cut_tree, m)?)?;
    m.add_function(wrap_pyfunction!(classify_near_tree, m)?)?;
    m.add_function(wrap_pyfunction!(av, m)?)?;
    m.add_function(wrap_pyfunction!(find_root_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(is_cograph, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(statements, m)?)?;
    Ok(())
}
