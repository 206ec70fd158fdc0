//! Python bindings. Structured results come back as plain dicts and lists.

use distspec::bounds::{self, BoundId};
use distspec::output::to_json;
use distspec::search::{self, GraphSource};
use distspec::{families, spectra, FamilySpec, InvariantReport};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_err(e: distspec::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, json: String) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (json,))
}

fn bound_ids(spec: &str) -> PyResult<Vec<BoundId>> {
    BoundId::parse_list(spec).map_err(value_err)
}

/// A simple undirected graph.
#[pyclass(name = "Graph", frozen)]
pub struct PyGraph {
    inner: distspec::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: distspec::Graph::from_edges(n, &edges).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: distspec::parse_graph6(text).map_err(value_err)? })
    }

    /// Builds a named family, e.g. `path:6`, `cmb:3,3`, `gab:9,2,3`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(value_err)?;
        Ok(PyGraph { inner: spec.build().map_err(value_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn graph6(&self) -> PyResult<String> {
        distspec::write_graph6(&self.inner).map_err(value_err)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, to_json(&InvariantReport::compute(&self.inner).map_err(value_err)?))
    }

    fn distance_matrix(&self) -> PyResult<Vec<Vec<u32>>> {
        let dm = distspec::DistanceMatrix::new(&self.inner).map_err(value_err)?;
        let n = dm.order();
        Ok((0..n).map(|i| (0..n).map(|j| dm.get(i, j)).collect()).collect())
    }

    /// Remoteness as an exact `(numerator, denominator)` pair.
    fn remoteness(&self) -> PyResult<(i64, i64)> {
        let dm = distspec::DistanceMatrix::new(&self.inner).map_err(value_err)?;
        let r = dm.remoteness().map_err(value_err)?;
        Ok((*r.numer(), *r.denom()))
    }

    fn distance_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(spectra::distance_spectrum(&self.inner).map_err(value_err)?.eigenvalues)
    }

    fn laplacian_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(spectra::laplacian_spectrum(&self.inner).map_err(value_err)?.eigenvalues)
    }

    #[pyo3(signature = (bounds = "all"))]
    fn check<'py>(&self, py: Python<'py>, bounds: &str) -> PyResult<Bound<'py, PyAny>> {
        let ids = bound_ids(bounds)?;
        to_py(py, to_json(&bounds::check_bounds(&ids, &self.inner).map_err(value_err)?))
    }

    fn __repr__(&self) -> String {
        match distspec::write_graph6(&self.inner) {
            Ok(g6) => format!("Graph({g6:?})"),
            Err(_) => format!("Graph(n={})", self.inner.order()),
        }
    }
}

/// Sweeps bounds over connected graphs of order `n`. With `p` and `samples`
/// the graphs are random; otherwise every labeled graph or, with `dedup`, one
/// per isomorphism class.
#[pyfunction]
#[pyo3(signature = (n, bounds = "all", dedup = false, allow_large = false, p = None, samples = None, seed = 0, threads = None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    n: usize,
    bounds: &str,
    dedup: bool,
    allow_large: bool,
    p: Option<f64>,
    samples: Option<usize>,
    seed: u64,
    threads: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let ids = bound_ids(bounds)?;
    let src = match (p, samples) {
        (Some(p), Some(samples)) => GraphSource::RandomConnected { n, p, samples, seed },
        (None, None) if dedup => GraphSource::ExhaustiveDedup { n, allow_large },
        (None, None) => GraphSource::ExhaustiveLabeled { n },
        _ => return Err(PyValueError::new_err("p and samples must be given together")),
    };
    let report = py
        .detach(|| match threads {
            Some(t) => search::verify_with_threads(&ids, &src, t),
            None => search::verify(&ids, &src),
        })
        .map_err(value_err)?;
    to_py(py, to_json(&report))
}

#[pyfunction]
fn extremal<'py>(py: Python<'py>, bound: &str, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let id: BoundId = bound.parse().map_err(value_err)?;
    to_py(py, to_json(&py.detach(|| search::extremal_search(id, n)).map_err(value_err)?))
}

#[pyfunction]
fn table1<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, to_json(&distspec::output::table1_records(&search::table1())))
}

#[pyfunction]
fn diam2_adjudication<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, to_json(&search::diam2_adjudication(n).map_err(value_err)?))
}

#[pyfunction]
fn wiener_crosscheck<'py>(py: Python<'py>, n: usize, d: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, to_json(&families::wiener_gab_crosscheck(n, d).map_err(value_err)?))
}

#[pyfunction]
fn conjecture2_chain<'py>(py: Python<'py>, d: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, to_json(&bounds::conjecture2_chain(d).map_err(value_err)?))
}

#[pyfunction]
fn f_function(x: f64) -> PyResult<f64> {
    bounds::f_function(x).map_err(value_err)
}

#[pyfunction]
fn bound_ids_all() -> Vec<&'static str> {
    BoundId::ALL.iter().map(|b| b.name()).collect()
}

#[pyfunction]
fn symmetric_eigenvalues(matrix: Vec<Vec<f64>>) -> PyResult<Vec<f64>> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(PyValueError::new_err("matrix must be square"));
    }
    let flat: Vec<f64> = matrix.into_iter().flatten().collect();
    spectra::symmetric_eigenvalues(n, &flat).map(|s| s.eigenvalues).map_err(value_err)
}

#[pymodule]
fn distspec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(extremal, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(diam2_adjudication, m)?)?;
    m.add_function(wrap_pyfunction!(wiener_crosscheck, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture2_chain, m)?)?;
    m.add_function(wrap_pyfunction!(f_function, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ids_all, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_eigenvalues, m)?)?;
    Ok(())
}
