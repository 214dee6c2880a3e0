//! Python bindings: diagrams with exact stacking multiplication, heights,
//! algebra dimensions, Gram determinants, semisimplicity reports and
//! generator-word decompositions.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use kmy::cells;
use kmy::decompose;
use kmy::height;
use kmy::ring::{parse_delta, RingSpec};
use kmy::specht::{Partition, SpechtModule};
use kmy::tower;

fn err(e: kmy::KmyError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// A pair partition of n top and n bottom vertices.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Diagram {
    inner: kmy::Diagram,
}

#[pymethods]
impl Diagram {
    /// Parses the text grammar, e.g. `Diagram(3, "1-2 3-1' 2'-3'")`.
    #[new]
    fn new(n: usize, text: &str) -> PyResult<Self> {
        Ok(Diagram { inner: kmy::Diagram::parse(n, text).map_err(err)? })
    }

    #[classmethod]
    fn identity(_cls: &Bound<'_, PyType>, n: usize) -> Self {
        Diagram { inner: kmy::Diagram::identity(n) }
    }

    /// The cap-cup generator u_i.
    #[classmethod]
    fn u(_cls: &Bound<'_, PyType>, n: usize, i: usize) -> PyResult<Self> {
        if i < 1 || i >= n {
            return Err(PyValueError::new_err("u_i needs 1 <= i <= n-1"));
        }
        Ok(Diagram { inner: kmy::Diagram::u(n, i) })
    }

    /// The crossing generator s_i.
    #[classmethod]
    fn s(_cls: &Bound<'_, PyType>, n: usize, i: usize) -> PyResult<Self> {
        if i < 1 || i >= n {
            return Err(PyValueError::new_err("s_i needs 1 <= i <= n-1"));
        }
        Ok(Diagram { inner: kmy::Diagram::s(n, i) })
    }

    /// Permutation diagram from a 0-based image list.
    #[classmethod]
    fn from_permutation(_cls: &Bound<'_, PyType>, sigma: Vec<usize>) -> PyResult<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &v in &sigma {
            if v >= n || seen[v] {
                return Err(PyValueError::new_err("not a permutation"));
            }
            seen[v] = true;
        }
        Ok(Diagram { inner: kmy::Diagram::from_permutation(&sigma) })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Canonical vertex pairs, 0-based (top 0..n, bottom n..2n).
    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.pairs()
    }

    /// Stacks self above other; returns `(loops, product)`.
    fn multiply(&self, other: &Diagram) -> PyResult<(u32, Diagram)> {
        let (loops, prod) = self.inner.multiply(&other.inner).map_err(err)?;
        Ok((loops, Diagram { inner: prod }))
    }

    fn flip(&self) -> Diagram {
        Diagram { inner: self.inner.flip() }
    }

    fn tensor(&self, other: &Diagram) -> Diagram {
        Diagram { inner: self.inner.tensor(&other.inner) }
    }

    fn propagating_count(&self) -> usize {
        self.inner.propagating_count()
    }

    fn is_planar(&self) -> bool {
        self.inner.is_planar()
    }

    /// Exact height (-1 for planar diagrams).
    fn height(&self) -> i64 {
        height::height_exact(&self.inner)
    }

    /// Upper bound from the standardized drawing.
    fn height_upper_bound(&self) -> i64 {
        height::height_upper_bound(&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram({}, \"{}\")", self.inner.n(), self.inner)
    }

    fn __eq__(&self, other: &Diagram) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// Dimension of J_{l,n}.
#[pyfunction]
fn dim(n: usize, l: i64) -> PyResult<usize> {
    Ok(height::closure_basis(n, l).map_err(err)?.len())
}

/// Canonical strings of the diagram basis of J_{l,n}.
#[pyfunction]
fn basis(n: usize, l: i64) -> PyResult<Vec<String>> {
    let algebra = kmy::KmyAlgebra::new(n, l, RingSpec::Laurent).map_err(err)?;
    Ok(algebra.basis().iter().map(|d| d.to_string()).collect())
}

/// The generator diagrams u_1..u_{n-1}, s_1..s_{l+1}.
#[pyfunction]
fn generators(n: usize, l: i64) -> PyResult<Vec<Diagram>> {
    Ok(height::generators(n, l)
        .map_err(err)?
        .into_iter()
        .map(|inner| Diagram { inner })
        .collect())
}

/// Number of half diagrams with p propagating lines.
#[pyfunction]
fn half_diagram_count(n: usize, l: i64, p: usize) -> PyResult<usize> {
    Ok(cells::half_diagrams(n, l, p).map_err(err)?.len())
}

/// Dimension of the cell module Delta_{l,n}(p, lambda).
#[pyfunction]
fn cell_dim(n: usize, l: i64, p: usize, lambda: Vec<usize>) -> PyResult<usize> {
    Ok(cells::CellModule::new(n, l, p, partition(lambda)?).map_err(err)?.dim())
}

/// Gram determinant of a cell module, canonically printed in `d`.
#[pyfunction]
fn gram_det(n: usize, l: i64, p: usize, lambda: Vec<usize>) -> PyResult<String> {
    Ok(cells::gram_det(n, l, p, partition(lambda)?).map_err(err)?.to_string())
}

/// Full Gram matrix as JSON (schema 1).
#[pyfunction]
fn gram_matrix_json(n: usize, l: i64, p: usize, lambda: Vec<usize>) -> PyResult<String> {
    Ok(cells::gram_matrix(n, l, p, partition(lambda)?).map_err(err)?.to_json())
}

/// Semisimplicity report at an exact delta (`"2/3"`, `"1+2i"`, ...);
/// returns `(verdict, json)`.
#[pyfunction]
fn semisimple(n: usize, l: i64, delta: &str) -> PyResult<(bool, String)> {
    let delta0 = parse_delta(delta).map_err(err)?;
    let report = cells::semisimple_at(n, l, &delta0).map_err(err)?;
    let verdict = report.semisimple;
    Ok((verdict, serde_json::to_string_pretty(&report).expect("serializable")))
}

/// Tower axiom reports as JSON; returns `(all_verified, json)`.
#[pyfunction]
#[pyo3(signature = (n, l, seed = 0))]
fn axioms(n: usize, l: i64, seed: u64) -> PyResult<(bool, String)> {
    let reports = tower::check_all(n, l, seed).map_err(err)?;
    let ok = reports.iter().all(|r| r.status != tower::Status::Failed);
    Ok((ok, serde_json::to_string_pretty(&reports).expect("serializable")))
}

/// Decomposes a diagram into a generator word (`"search"` or
/// `"constructive"`).
#[pyfunction]
#[pyo3(signature = (diagram, l, method = "constructive"))]
fn decompose_word(diagram: &Diagram, l: i64, method: &str) -> PyResult<String> {
    let word = match method {
        "search" => decompose::decompose_search(&diagram.inner, l).map_err(err)?,
        "constructive" => decompose::decompose_constructive(&diagram.inner, l).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    };
    Ok(word.to_string())
}

/// Evaluates a generator word; returns `(delta_exponent, diagram)`.
#[pyfunction]
fn evaluate_word(n: usize, l: i64, word: &str) -> PyResult<(i64, Diagram)> {
    let word = decompose::GeneratorWord::parse(n, l, word).map_err(err)?;
    let (k, d) = word.evaluate().map_err(err)?;
    Ok((k, Diagram { inner: d }))
}

/// Dimension of the Specht module S^lambda.
#[pyfunction]
fn specht_dim(lambda: Vec<usize>) -> PyResult<usize> {
    Ok(SpechtModule::new(partition(lambda)?).dim())
}

#[pymodule]
fn kmy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(dim, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(half_diagram_count, m)?)?;
    m.add_function(wrap_pyfunction!(cell_dim, m)?)?;
    m.add_function(wrap_pyfunction!(gram_det, m)?)?;
    m.add_function(wrap_pyfunction!(gram_matrix_json, m)?)?;
    m.add_function(wrap_pyfunction!(semisimple, m)?)?;
    m.add_function(wrap_pyfunction!(axioms, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_word, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_word, m)?)?;
    m.add_function(wrap_pyfunction!(specht_dim, m)?)?;
    Ok(())
}
