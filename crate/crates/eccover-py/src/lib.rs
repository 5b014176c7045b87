//! Python bindings. Rationals cross the boundary as "p/q" strings so the
//! exactness guarantee survives the trip.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use eccover::graph::Multigraph;
use eccover::io::{self, Instance};
use eccover::ratio::{rat, rat_from_str, rat_to_string, Rat};
use eccover::verify::{
    brute_force_dominates, min_cost_2ec, verify_certificate, Certificate, MemberPredicate,
    Relation,
};
use eccover::{gen, square, triangle, uniform};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_rats(xs: Vec<String>) -> PyResult<Vec<Rat>> {
    xs.iter().map(|s| rat_from_str(s).map_err(err)).collect()
}

fn show_rats(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(rat_to_string).collect()
}

/// An undirected multigraph with labeled edges.
#[pyclass(name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: Multigraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize) -> Self {
        PyGraph { inner: Multigraph::new(n) }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: io::graph_from_json(text).map_err(err)? })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: io::parse_graph_text(text).map_err(err)? })
    }

    #[pyo3(signature = (u, v, label=None))]
    fn add_edge(&mut self, u: usize, v: usize, label: Option<String>) -> PyResult<usize> {
        if u >= self.inner.n || v >= self.inner.n || u == v {
            return Err(PyValueError::new_err(format!("bad edge {u}-{v}")));
        }
        let e = self.inner.m();
        let lab = label.unwrap_or_else(|| format!("e{e}"));
        self.inner.add_labeled_edge(u, v, lab);
        Ok(e)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.edges.iter().map(|e| e.label.clone()).collect()
    }

    fn endpoints(&self, e: usize) -> PyResult<(usize, usize)> {
        if e >= self.inner.m() {
            return Err(PyValueError::new_err(format!("no edge {e}")));
        }
        Ok(self.inner.endpoints(e))
    }

    fn degree(&self, v: usize) -> PyResult<u32> {
        if v >= self.inner.n {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.inner.degree(v))
    }

    fn edge_connectivity(&self) -> u32 {
        self.inner.edge_connectivity()
    }

    fn is_2ec(&self, mults: Vec<u32>) -> PyResult<bool> {
        if mults.len() != self.inner.m() {
            return Err(PyValueError::new_err("multiplicity vector length mismatch"));
        }
        Ok(self.inner.is_2ec(&mults))
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n, self.inner.m())
    }
}

/// An LP point: a graph, per-edge values, optional costs, optional e* mark.
#[pyclass(name = "Instance")]
#[derive(Clone)]
struct PyInstance {
    inner: Instance,
}

#[pymethods]
impl PyInstance {
    #[new]
    #[pyo3(signature = (graph, x, cost=None, estar=None))]
    fn new(
        graph: PyGraph,
        x: Vec<String>,
        cost: Option<Vec<String>>,
        estar: Option<usize>,
    ) -> PyResult<Self> {
        let x = parse_rats(x)?;
        if x.len() != graph.inner.m() {
            return Err(PyValueError::new_err("x length mismatch"));
        }
        let cost = cost.map(parse_rats).transpose()?;
        Ok(PyInstance {
            inner: Instance { graph: graph.inner, x, cost, estar },
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyInstance { inner: io::instance_from_json(text).map_err(err)? })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph.clone() }
    }

    #[getter]
    fn x(&self) -> Vec<String> {
        show_rats(&self.inner.x)
    }

    #[getter]
    fn cost(&self) -> Option<Vec<String>> {
        self.inner.cost.as_deref().map(show_rats)
    }

    #[getter]
    fn estar(&self) -> Option<usize> {
        self.inner.estar
    }

    fn to_json(&self) -> String {
        io::instance_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(n={}, m={})",
            self.inner.graph.n,
            self.inner.graph.m()
        )
    }
}

/// A convex combination certificate with its target vector and relation.
#[pyclass(name = "Certificate")]
#[derive(Clone)]
struct PyCertificate {
    inner: Certificate,
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCertificate { inner: Certificate::from_json(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn target(&self) -> Vec<String> {
        show_rats(&self.inner.target)
    }

    #[getter]
    fn weights(&self) -> Vec<String> {
        self.inner
            .combination
            .terms
            .iter()
            .map(|t| rat_to_string(&t.weight))
            .collect()
    }

    #[getter]
    fn members(&self) -> Vec<Vec<u32>> {
        self.inner.combination.terms.iter().map(|t| t.mults.clone()).collect()
    }

    fn aggregate(&self) -> Vec<String> {
        show_rats(&self.inner.combination.aggregate())
    }

    /// Replays the certificate; raises ValueError on any violation.
    fn verify(&self) -> PyResult<()> {
        verify_certificate(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({} members)", self.inner.combination.terms.len())
    }
}

fn wrap(
    graph: &Multigraph,
    target: Vec<Rat>,
    relation: Relation,
    predicate: MemberPredicate,
    comb: eccover::comb::ConvexCombination,
) -> PyCertificate {
    PyCertificate {
        inner: Certificate {
            graph: graph.clone(),
            target,
            relation,
            predicate,
            combination: comb,
            notes: None,
        },
    }
}

/// Everywhere-7/8 cover of a cubic 3-edge-connected graph.
#[pyfunction]
fn uniform_cover(g: &PyGraph) -> PyResult<PyCertificate> {
    let comb = uniform::cover_7_8(&g.inner).map_err(err)?;
    let target = vec![rat(7, 8); g.inner.m()];
    Ok(wrap(
        &g.inner,
        target,
        Relation::Dominates,
        MemberPredicate::TwoEcSubgraph,
        comb,
    ))
}

/// Everywhere-13/15 cover given a proper 3-edge-coloring.
#[pyfunction]
fn uniform_cover_13_15(g: &PyGraph, coloring: Vec<u8>) -> PyResult<PyCertificate> {
    let comb = uniform::cover_13_15(&g.inner, &coloring).map_err(err)?;
    let target = vec![rat(13, 15); g.inner.m()];
    Ok(wrap(
        &g.inner,
        target,
        Relation::Dominates,
        MemberPredicate::TwoEcSubgraph,
        comb,
    ))
}

/// 9/7 x cover of a half-integer square point.
#[pyfunction]
fn square_certificate(inst: &PyInstance) -> PyResult<PyCertificate> {
    let comb = square::square_certificate(&inst.inner.graph, &inst.inner.x).map_err(err)?;
    let target: Vec<Rat> = inst.inner.x.iter().map(|x| rat(9, 7) * x).collect();
    Ok(wrap(
        &inst.inner.graph,
        target,
        Relation::Dominates,
        MemberPredicate::TwoEcMultigraph,
        comb,
    ))
}

/// z^{x,e*} cover of a half-integer triangle point.
#[pyfunction]
fn triangle_certificate(inst: &PyInstance) -> PyResult<PyCertificate> {
    let estar = inst
        .inner
        .estar
        .ok_or_else(|| PyValueError::new_err("triangle point needs an estar marker"))?;
    let point =
        triangle::validate_triangle(&inst.inner.graph, &inst.inner.x, estar).map_err(err)?;
    let comb =
        triangle::triangle_certificate(&inst.inner.graph, &inst.inner.x, estar).map_err(err)?;
    Ok(wrap(
        &inst.inner.graph,
        point.z_vector(),
        Relation::Equal,
        MemberPredicate::TwoEcMultigraph,
        comb,
    ))
}

/// Brute-force oracle on small graphs; no pipeline code involved.
#[pyfunction]
fn oracle_dominates(cert: &PyCertificate) -> PyResult<bool> {
    brute_force_dominates(&cert.inner.graph, &cert.inner.target, cert.inner.predicate)
        .map_err(err)
}

/// Exact minimum-cost 2-edge-connected spanning multigraph, multiplicity <= 2.
#[pyfunction]
fn min_cost_2ec_py(g: &PyGraph, cost: Vec<String>) -> PyResult<(String, Vec<u32>)> {
    let cost = parse_rats(cost)?;
    if cost.len() != g.inner.m() {
        return Err(PyValueError::new_err("cost length mismatch"));
    }
    let (opt, sol) = min_cost_2ec(&g.inner, &cost).map_err(err)?;
    Ok((rat_to_string(&opt), sol))
}

#[pyfunction]
fn donut(k: usize) -> PyResult<PyInstance> {
    if k < 2 {
        return Err(PyValueError::new_err("donut needs k >= 2"));
    }
    Ok(PyInstance { inner: gen::k_donut(k) })
}

#[pyfunction]
#[pyo3(signature = (n, seed=0))]
fn random_cubic(n: usize, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: gen::random_cubic_3ec(n, seed).map_err(err)? })
}

#[pyfunction]
fn named_graph(name: &str) -> PyResult<PyGraph> {
    let g = match name {
        "k4" => gen::k4(),
        "k5" => gen::k5(),
        "k33" => gen::k33(),
        "prism" => gen::prism(),
        "petersen" => gen::petersen(),
        "octahedron" => gen::octahedron(),
        _ => return Err(PyValueError::new_err(format!("unknown graph {name}"))),
    };
    Ok(PyGraph { inner: g })
}

#[pyfunction]
fn triangulated_k4() -> PyInstance {
    PyInstance { inner: gen::triangulated_k4() }
}

#[pymodule]
fn eccover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyInstance>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(uniform_cover, m)?)?;
    m.add_function(wrap_pyfunction!(uniform_cover_13_15, m)?)?;
    m.add_function(wrap_pyfunction!(square_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_dominates, m)?)?;
    m.add_function(wrap_pyfunction!(min_cost_2ec_py, m)?)?;
    m.add_function(wrap_pyfunction!(donut, m)?)?;
    m.add_function(wrap_pyfunction!(random_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(named_graph, m)?)?;
    m.add_function(wrap_pyfunction!(triangulated_k4, m)?)?;
    Ok(())
}
