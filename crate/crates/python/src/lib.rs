//! Python bindings. Matrices, super matrices and polynomials are built from
//! the same text literals the CLI accepts, e.g. `Matrix("[1 2;3 4]", "Z")`.

// pyo3 0.22 macros trip this lint on every PyResult method.
#![allow(clippy::useless_conversion)]

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use natprod_core::json::{matrix_from_json, matrix_to_json, poly_from_json, poly_to_json, super_to_json, to_canonical_string};
use natprod_core::structures::{analyze_with, AnalyzeOptions, Carrier, Operation};
use natprod_core::text::{parse_matrix, parse_poly, parse_super};
use natprod_core::verify::{run_suite, Suite, VerifyOptions};
use natprod_core::{self as core, AlgebraError as CoreError, Domain};

create_exception!(natprod, AlgebraError, PyValueError, "Raised for any failed algebraic operation.");

fn err(e: CoreError) -> PyErr {
    AlgebraError::new_err(e.to_string())
}

fn domain(text: &str) -> PyResult<Domain> {
    text.parse().map_err(err)
}

fn json_loads(py: Python<'_>, v: &serde_json::Value) -> PyResult<PyObject> {
    Ok(py.import_bound("json")?.call_method1("loads", (to_canonical_string(v),))?.unbind())
}

#[pyclass(name = "Matrix", module = "natprod", frozen, eq)]
#[derive(Clone, PartialEq)]
pub struct PyMatrix(core::Matrix);

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (text, domain = "Q"))]
    fn new(text: &str, domain: &str) -> PyResult<Self> {
        Ok(PyMatrix(parse_matrix(text, self::domain(domain)?).map_err(err)?))
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| AlgebraError::new_err(e.to_string()))?;
        Ok(PyMatrix(matrix_from_json(&v).map_err(err)?))
    }

    #[classmethod]
    #[pyo3(signature = (rows, cols, domain = "Q"))]
    fn ones(_cls: &Bound<'_, PyType>, rows: usize, cols: usize, domain: &str) -> PyResult<Self> {
        Ok(PyMatrix(core::Matrix::ones(core::Shape::new(rows, cols).map_err(err)?, self::domain(domain)?)))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    #[getter]
    fn domain(&self) -> String {
        self.0.domain().to_string()
    }

    /// Entries as exact strings, row by row.
    fn entries(&self) -> Vec<Vec<String>> {
        (0..self.0.rows())
            .map(|i| self.0.row_values(i).iter().map(core::scalar::render_rational).collect())
            .collect()
    }

    fn nprod(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.0.nproduct(&other.0).map(PyMatrix).map_err(err)
    }

    fn uprod(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.0.uproduct(&other.0).map(PyMatrix).map_err(err)
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.0.add(&other.0).map(PyMatrix).map_err(err)
    }

    fn __sub__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.0.sub(&other.0).map(PyMatrix).map_err(err)
    }

    /// `a * b` is the natural product.
    fn __mul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.nprod(other)
    }

    /// `a @ b` is the usual product.
    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.uprod(other)
    }

    fn inverse(&self) -> PyResult<PyMatrix> {
        self.0.natural_inverse().map(PyMatrix).map_err(err)
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn is_orthogonal(&self, other: &PyMatrix) -> PyResult<bool> {
        self.0.is_orthogonal(&other.0).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The 0/1 pattern of matrices orthogonal to this one.
    fn main_complement(&self) -> PyMatrix {
        PyMatrix(self.0.main_complement().to_matrix(Domain::Int))
    }

    fn divides(&self, other: &PyMatrix) -> PyResult<Option<PyMatrix>> {
        Ok(self.0.divides(&other.0).map_err(err)?.map(PyMatrix))
    }

    fn to_json(&self) -> String {
        to_canonical_string(&matrix_to_json(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix('{}', '{}')", self.0, self.0.domain())
    }
}

#[pyclass(name = "SuperMatrix", module = "natprod", frozen, eq)]
#[derive(Clone, PartialEq)]
pub struct PySuperMatrix(core::SuperMatrix);

#[pymethods]
impl PySuperMatrix {
    #[new]
    #[pyo3(signature = (text, domain = "Q"))]
    fn new(text: &str, domain: &str) -> PyResult<Self> {
        Ok(PySuperMatrix(parse_super(text, self::domain(domain)?).map_err(err)?))
    }

    #[getter]
    fn row_cuts(&self) -> Vec<usize> {
        self.0.ptype().row_cuts().iter().copied().collect()
    }

    #[getter]
    fn col_cuts(&self) -> Vec<usize> {
        self.0.ptype().col_cuts().iter().copied().collect()
    }

    #[getter]
    fn base(&self) -> PyMatrix {
        PyMatrix(self.0.base().clone())
    }

    fn same_type(&self, other: &PySuperMatrix) -> bool {
        self.0.same_type(&other.0)
    }

    fn nprod(&self, other: &PySuperMatrix) -> PyResult<PySuperMatrix> {
        self.0.nproduct(&other.0).map(PySuperMatrix).map_err(err)
    }

    fn __add__(&self, other: &PySuperMatrix) -> PyResult<PySuperMatrix> {
        self.0.add(&other.0).map(PySuperMatrix).map_err(err)
    }

    fn __mul__(&self, other: &PySuperMatrix) -> PyResult<PySuperMatrix> {
        self.nprod(other)
    }

    fn inverse(&self) -> PyResult<PySuperMatrix> {
        self.0.inverse().map(PySuperMatrix).map_err(err)
    }

    fn to_json(&self) -> String {
        to_canonical_string(&super_to_json(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SuperMatrix('{}', '{}')", self.0, self.0.domain())
    }
}

#[pyclass(name = "MatPoly", module = "natprod", frozen, eq)]
#[derive(Clone, PartialEq)]
pub struct PyMatPoly(core::MatPoly);

#[pymethods]
impl PyMatPoly {
    #[new]
    #[pyo3(signature = (text, domain = "Q"))]
    fn new(text: &str, domain: &str) -> PyResult<Self> {
        Ok(PyMatPoly(parse_poly(text, self::domain(domain)?).map_err(err)?))
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| AlgebraError::new_err(e.to_string()))?;
        Ok(PyMatPoly(poly_from_json(&v).map_err(err)?))
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn coeff(&self, k: usize) -> PyMatrix {
        PyMatrix(self.0.coeff(k))
    }

    fn __add__(&self, other: &PyMatPoly) -> PyResult<PyMatPoly> {
        self.0.add(&other.0).map(PyMatPoly).map_err(err)
    }

    fn __sub__(&self, other: &PyMatPoly) -> PyResult<PyMatPoly> {
        self.0.sub(&other.0).map(PyMatPoly).map_err(err)
    }

    fn nmul(&self, other: &PyMatPoly) -> PyResult<PyMatPoly> {
        self.0.mul_natural(&other.0).map(PyMatPoly).map_err(err)
    }

    fn umul(&self, other: &PyMatPoly) -> PyResult<PyMatPoly> {
        self.0.mul_usual(&other.0).map(PyMatPoly).map_err(err)
    }

    fn __mul__(&self, other: &PyMatPoly) -> PyResult<PyMatPoly> {
        self.nmul(other)
    }

    fn derivative(&self) -> PyMatPoly {
        PyMatPoly(self.0.derivative())
    }

    #[pyo3(signature = (constant = None))]
    fn integrate(&self, constant: Option<&PyMatrix>) -> PyResult<PyMatPoly> {
        self.0.integrate(constant.map(|c| &c.0)).map(PyMatPoly).map_err(err)
    }

    /// `mode` is "natural" (lead becomes all ones) or "usual" (lead becomes the identity).
    #[pyo3(signature = (mode = "natural"))]
    fn monic(&self, mode: &str) -> PyResult<PyMatPoly> {
        match mode {
            "natural" => self.0.monicize_natural(),
            "usual" => self.0.monicize_usual(),
            other => return Err(PyValueError::new_err(format!("unknown mode `{other}`"))),
        }
        .map(PyMatPoly)
        .map_err(err)
    }

    fn evaluate(&self, x: &PyMatrix) -> PyResult<PyMatrix> {
        self.0.evaluate_natural(&x.0).map(PyMatrix).map_err(err)
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit_natural()
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent_natural()
    }

    fn to_json(&self) -> String {
        to_canonical_string(&poly_to_json(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MatPoly('{}', '{}')", self.0, self.0.domain())
    }
}

/// Rational solutions of `a x^k = c`, entrywise.
#[pyfunction]
fn solve_binomial(a: &PyMatrix, c: &PyMatrix, k: u32) -> PyResult<Vec<PyMatrix>> {
    let roots = core::solve_binomial(&a.0, &c.0, k).map_err(err)?;
    Ok(roots.roots.into_iter().map(PyMatrix).collect())
}

/// Rational solutions of `a x^2 + b x + c = 0`, entrywise.
#[pyfunction]
fn solve_quadratic(a: &PyMatrix, b: &PyMatrix, c: &PyMatrix) -> PyResult<Vec<PyMatrix>> {
    let roots = core::solve_quadratic(&a.0, &b.0, &c.0).map_err(err)?;
    Ok(roots.roots.into_iter().map(PyMatrix).collect())
}

fn carrier(token: &str) -> PyResult<Carrier> {
    let (body, op) = match token.rsplit_once('@') {
        Some((b, "add")) => (b, Operation::Addition),
        Some((b, "nprod")) => (b, Operation::NaturalProduct),
        None => (token, Operation::NaturalProduct),
        Some((_, other)) => return Err(PyValueError::new_err(format!("unknown operation `{other}`"))),
    };
    let shape = |s: &str| -> PyResult<core::Shape> {
        let bad = || PyValueError::new_err(format!("bad shape `{s}`"));
        let (r, c) = s.split_once('x').ok_or_else(bad)?;
        core::Shape::new(r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?).map_err(err)
    };
    match body.split(':').collect::<Vec<_>>().as_slice() {
        ["masks", s] => Carrier::masks(shape(s)?, op).map_err(err),
        ["zn", n, s] => {
            let n: u64 = n.parse().map_err(|_| PyValueError::new_err(format!("bad modulus `{n}`")))?;
            Carrier::all_matrices(shape(s)?, n, op).map_err(err)
        }
        _ => Err(PyValueError::new_err(format!("unknown carrier `{token}`"))),
    }
}

/// Structure report for a carrier such as "masks:2x2" or "zn:3:1x2@add", as a dict.
#[pyfunction]
#[pyo3(signature = (token, seed = 0, samples = 10_000))]
fn analyze(py: Python<'_>, token: &str, seed: u64, samples: usize) -> PyResult<PyObject> {
    let c = carrier(token)?;
    let rep = py.allow_threads(|| analyze_with(&c, AnalyzeOptions { seed, samples })).map_err(err)?;
    json_loads(py, &rep.to_json())
}

/// Run a built-in suite ("paper-examples", "laws" or "census") and return its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0, samples = 10_000))]
fn verify(py: Python<'_>, suite: &str, seed: u64, samples: usize) -> PyResult<PyObject> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let rep = py.allow_threads(|| run_suite(suite, VerifyOptions { seed, samples }));
    json_loads(py, &rep.to_json())
}

#[pymodule]
fn natprod(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PySuperMatrix>()?;
    m.add_class::<PyMatPoly>()?;
    m.add_function(wrap_pyfunction!(solve_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(solve_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("AlgebraError", m.py().get_type_bound::<AlgebraError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
