//! Python bindings: partitions and characters, FB Grothendieck classes, the FA-module formulas,
//! the matrix oracle and the verification suites. Partitions cross the boundary as tuples.

use std::collections::BTreeMap;

use farep::facalc::{self, FBModuleData, SimpleLabel};
use farep::fbgroth;
use farep::oracle::{self, Route, TruncatedFunctor};
use farep::partitions::{partitions_of as all_partitions, Partition};
use farep::symrep::{self, IrrDecomposition};
use farep::verify;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

fn err(e: farep::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn tuple<'py>(py: Python<'py>, p: &Partition) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, p.parts())
}

fn irr_dict<'py>(py: Python<'py>, x: &IrrDecomposition) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (p, m) in x.mults() {
        d.set_item(tuple(py, p)?, m)?;
    }
    Ok(d)
}

fn irr_from(mults: BTreeMap<Vec<usize>, i64>) -> PyResult<IrrDecomposition> {
    let mut out = BTreeMap::new();
    for (parts, m) in mults {
        out.insert(partition(parts)?, m);
    }
    let n = out.keys().next().map(Partition::size).ok_or_else(|| PyValueError::new_err("an empty decomposition has no degree"))?;
    IrrDecomposition::new(n, out).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_bound_py_any(py),
            (None, Some(u)) => u.into_bound_py_any(py),
            _ => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            Ok(list.into_any())
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, item) in map {
                d.set_item(k, json_to_py(py, item)?)?;
            }
            Ok(d.into_any())
        }
    }
}

/// A truncated virtual FB-module: integer coefficients on partitions of size ≤ trunc.
#[pyclass(name = "VirtualFB", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyVirtualFB(fbgroth::VirtualFB);

#[pymethods]
impl PyVirtualFB {
    #[new]
    #[pyo3(signature = (trunc, coeffs = BTreeMap::new()))]
    fn new(trunc: usize, coeffs: BTreeMap<Vec<usize>, i64>) -> PyResult<Self> {
        let mut out = BTreeMap::new();
        for (parts, c) in coeffs {
            out.insert(partition(parts)?, c);
        }
        fbgroth::VirtualFB::new(trunc, out).map(Self).map_err(err)
    }

    #[staticmethod]
    fn triv(trunc: usize) -> Self {
        Self(fbgroth::VirtualFB::triv(trunc))
    }

    #[staticmethod]
    fn sgn(k: usize, trunc: usize) -> Self {
        Self(fbgroth::VirtualFB::sgn(k, trunc))
    }

    #[staticmethod]
    fn unit(trunc: usize) -> Self {
        Self(fbgroth::VirtualFB::unit(trunc))
    }

    /// Alternating sum of sign representations starting in degree k.
    #[staticmethod]
    fn series_s(k: usize, trunc: usize) -> Self {
        Self(fbgroth::series_s(k, trunc))
    }

    /// Sum of hooks with first column of length k.
    #[staticmethod]
    fn series_h(k: usize, trunc: usize) -> Self {
        Self(fbgroth::series_h(k, trunc))
    }

    #[getter]
    fn trunc(&self) -> usize {
        self.0.trunc()
    }

    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (p, c) in self.0.coeffs() {
            d.set_item(tuple(py, p)?, c)?;
        }
        Ok(d)
    }

    fn dimension(&self, k: usize) -> PyResult<i64> {
        self.0.dimension(k).map_err(err)
    }

    /// Day convolution (induction product).
    fn day(&self, other: &Self) -> PyResult<Self> {
        self.0.day(&other.0).map(Self).map_err(err)
    }

    /// Convolution inverse of − ⊙ triv.
    fn invert_triv(&self) -> PyResult<Self> {
        fbgroth::invert_triv(&self.0).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("VirtualFB(trunc={}, {})", self.0.trunc(), self.0)
    }
}

/// A built kFA-module materialized on sets of size ≤ trunc, e.g. `pbar:2` or `kfi:1+k0`.
#[pyclass(name = "Functor", frozen)]
struct PyFunctor(TruncatedFunctor);

#[pymethods]
impl PyFunctor {
    #[new]
    fn new(descriptor: &str, trunc: usize) -> PyResult<Self> {
        TruncatedFunctor::parse(descriptor, trunc).map(Self).map_err(err)
    }

    #[getter]
    fn descriptor(&self) -> String {
        self.0.descriptor.to_string()
    }

    #[getter]
    fn trunc(&self) -> usize {
        self.0.trunc
    }

    fn dim(&self, size: usize) -> usize {
        self.0.dim(size)
    }

    fn dims(&self) -> Vec<usize> {
        self.0.dims()
    }

    fn __repr__(&self) -> String {
        format!("Functor('{}', trunc={})", self.0.descriptor, self.0.trunc)
    }
}

#[pyfunction]
fn partitions_of(py: Python<'_>, n: usize) -> PyResult<Vec<Bound<'_, PyTuple>>> {
    all_partitions(n).iter().map(|p| tuple(py, p)).collect()
}

/// Dimension of the Specht module S_λ.
#[pyfunction]
fn specht_dimension(parts: Vec<usize>) -> PyResult<u64> {
    Ok(partition(parts)?.dim())
}

/// (partitions, rows) with rows[i][j] = χ_{λ_i} on the class of type λ_j.
#[pyfunction]
fn character_table(py: Python<'_>, n: usize) -> PyResult<(Vec<Bound<'_, PyTuple>>, Vec<Vec<i64>>)> {
    let t = symrep::character_table(n).map_err(err)?;
    let labels = t.partitions().iter().map(|p| tuple(py, p)).collect::<PyResult<_>>()?;
    let rows = (0..t.partitions().len()).map(|i| t.row(i).to_vec()).collect();
    Ok((labels, rows))
}

#[pyfunction]
fn induction_product<'py>(
    py: Python<'py>,
    a: BTreeMap<Vec<usize>, i64>,
    b: BTreeMap<Vec<usize>, i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let x = symrep::induction_product(&irr_from(a)?, &irr_from(b)?).map_err(err)?;
    irr_dict(py, &x)
}

/// The S_t-module of a simple on a t-element set; labels are `C 2,1`, `L 1` or `k0`.
#[pyfunction]
fn simple_eval<'py>(py: Python<'py>, label: &str, t: usize) -> PyResult<Bound<'py, PyDict>> {
    let label: SimpleLabel = label.parse().map_err(err)?;
    irr_dict(py, &facalc::simple_eval(&label, t).map_err(err)?)
}

#[pyfunction]
fn schur_dimension(parts: Vec<usize>, m: usize) -> PyResult<u128> {
    Ok(facalc::schur_dimension(&partition(parts)?, m))
}

/// Indecomposable projective summands of S_λ(P^FA), with repetition.
#[pyfunction]
fn decompose_schur_pfin(parts: Vec<usize>) -> PyResult<Vec<String>> {
    let summands = facalc::decompose_schur_pfin(&partition(parts)?).map_err(err)?;
    Ok(summands.iter().map(|s| s.to_string()).collect())
}

#[pyfunction]
fn structure_kfi(n: usize) -> PyResult<Vec<(String, u64)>> {
    Ok(facalc::structure_kfi(n).map_err(err)?.into_iter().map(|(l, m)| (l.to_string(), m)).collect())
}

/// Composition-factor multiplicities from FB-module data given as a JSON string.
#[pyfunction]
fn multiplicities(data: &str) -> PyResult<BTreeMap<String, i64>> {
    let data: FBModuleData = serde_json::from_str(data).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let m = facalc::multiplicities(&data).map_err(err)?;
    Ok(m.into_iter().map(|(l, c)| (l.to_string(), c)).collect())
}

/// Natural transformations between built functors; the character is a list of
/// (left partition, right partition, multiplicity) when available.
#[pyfunction]
#[pyo3(signature = (source, target, route = "presented"))]
fn nat_hom<'py>(py: Python<'py>, source: &PyFunctor, target: &PyFunctor, route: &str) -> PyResult<Bound<'py, PyDict>> {
    let route = match route {
        "presented" => Route::Presented,
        "generic" => Route::Generic,
        _ => return Err(PyValueError::new_err(format!("unknown route '{route}'"))),
    };
    let hom = oracle::nat_hom(&source.0, &target.0, route).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("dimension", hom.dimension)?;
    out.set_item("route", hom.route.to_string())?;
    match hom.decomposition().map_err(err)? {
        Some(d) => {
            let entries = PyList::empty(py);
            for ((l, r), c) in &d.mults {
                entries.append((tuple(py, l)?, tuple(py, r)?, *c))?;
            }
            out.set_item("character", entries)?;
        }
        None => out.set_item("character", py.None())?,
    }
    Ok(out)
}

/// Runs a verification suite and returns its claim reports as dictionaries.
#[pyfunction]
#[pyo3(signature = (name, max_size = 6, seed = 0))]
fn run_suite<'py>(py: Python<'py>, name: &str, max_size: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let reports = verify::run_suite(name, max_size, seed).map_err(err)?;
    json_to_py(py, &serde_json::to_value(reports).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

#[pyfunction]
fn groth_identity<'py>(py: Python<'py>, name: &str, trunc: usize) -> PyResult<Bound<'py, PyAny>> {
    let reports = verify::groth_identity(name, trunc, trunc).map_err(err)?;
    json_to_py(py, &serde_json::to_value(reports).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

#[pymodule]
#[pyo3(name = "farep")]
fn farep_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVirtualFB>()?;
    m.add_class::<PyFunctor>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(specht_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(induction_product, m)?)?;
    m.add_function(wrap_pyfunction!(simple_eval, m)?)?;
    m.add_function(wrap_pyfunction!(schur_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_schur_pfin, m)?)?;
    m.add_function(wrap_pyfunction!(structure_kfi, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(nat_hom, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(groth_identity, m)?)?;
    m.add("SUITES", verify::SUITES.to_vec())?;
    m.add("GROTH_IDENTITIES", verify::GROTH_IDENTITIES.to_vec())?;
    Ok(())
}
