//! Python bindings: `minplus.Matrix`, `minplus.Polynomial`,
//! `minplus.Factorization` and a few module-level helpers.
//!
//! Values cross the boundary as `int` or `fractions.Fraction`; `ε` is
//! `math.inf` (and `None` or the string `"inf"` are accepted on input).
//! Vertices are 0-based.

use minplus::semiring::format_rational;
use minplus::{
    charpoly_flv, charpoly_tropdet, coefficient_check, enumerate_circuits, min_cycle_mean,
    separated_check, tropdet_assignment, verify_corollary_equivalence,
    verify_separated_factorization, Caps, Factorization, MinPlus, MinPlusMatrix,
    MinPlusPolynomial, Network, Rational,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

create_exception!(minplus, CapExceededError, PyValueError, "A size cap was exceeded.");

fn to_py_err(e: minplus::Error) -> PyErr {
    if e.is_cap() {
        CapExceededError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn value_from_py(obj: &Bound<'_, PyAny>) -> PyResult<MinPlus> {
    if obj.is_none() {
        return Ok(MinPlus::Epsilon);
    }
    if obj.is_instance_of::<PyFloat>() {
        let v: f64 = obj.extract()?;
        if v == f64::INFINITY {
            return Ok(MinPlus::Epsilon);
        }
        if !v.is_finite() {
            return Err(PyValueError::new_err(format!("{v} is not a min-plus value")));
        }
    }
    let text = obj.str()?.to_string();
    text.parse::<MinPlus>()
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

fn rational_to_py<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let text = format_rational(q);
    if q.is_integer() {
        py.import("builtins")?.getattr("int")?.call1((text,))
    } else {
        py.import("fractions")?.getattr("Fraction")?.call1((text,))
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &MinPlus) -> PyResult<Bound<'py, PyAny>> {
    match v {
        MinPlus::Finite(q) => rational_to_py(py, q),
        MinPlus::Epsilon => Ok(PyFloat::new(py, f64::INFINITY).into_any()),
    }
}

fn values_to_py<'py>(py: Python<'py>, vs: &[MinPlus]) -> PyResult<Bound<'py, PyList>> {
    let items = vs.iter().map(|v| value_to_py(py, v)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.getattr("loads")?.call1((text,))
}

fn caps(subsets: usize, circuits: usize, exhaustive: usize) -> Caps {
    Caps { subsets, circuits, exhaustive, ..Caps::default() }
}

/// Square matrix over the min-plus semiring.
#[pyclass(name = "Matrix", module = "minplus", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatrix {
    inner: MinPlusMatrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(value_from_py).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        let inner = MinPlusMatrix::from_rows(rows).map_err(to_py_err)?;
        Ok(PyMatrix { inner })
    }

    /// Reads the whitespace or JSON matrix format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = minplus::io::parse_matrix(text).map_err(to_py_err)?;
        Ok(PyMatrix { inner })
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyMatrix { inner: MinPlusMatrix::identity(n) }
    }

    /// The 7×7 matrix whose polynomials factor as
    /// `(x ⊕ 2)^3 ⊗ (x ⊕ 14) ⊗ x^3` and `(x ⊕ 2)^6 ⊗ (x ⊕ 3)`.
    #[staticmethod]
    fn worked_example() -> Self {
        PyMatrix { inner: minplus::examples::worked_example_matrix() }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let rows = self.inner.rows().map(|r| values_to_py(py, r)).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    fn oplus(&self, other: &PyMatrix) -> PyResult<Self> {
        let inner = self.inner.oplus(&other.inner).map_err(to_py_err)?;
        Ok(PyMatrix { inner })
    }

    fn otimes(&self, other: &PyMatrix) -> PyResult<Self> {
        let inner = self.inner.otimes(&other.inner).map_err(to_py_err)?;
        Ok(PyMatrix { inner })
    }

    fn power(&self, k: usize) -> Self {
        PyMatrix { inner: self.inner.power(k) }
    }

    fn trace<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &self.inner.trace())
    }

    fn tropdet<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &tropdet_assignment(&self.inner))
    }

    /// `g_A(x) = tropdet(A ⊕ x⊗I)`.
    #[pyo3(signature = (cap = 16))]
    fn charpoly_tropdet(&self, cap: usize) -> PyResult<PyPolynomial> {
        let inner = charpoly_tropdet(&self.inner, cap).map_err(to_py_err)?;
        Ok(PyPolynomial { inner })
    }

    /// `ĝ_A` from the trace recursion.
    fn charpoly_flv(&self) -> PyPolynomial {
        PyPolynomial { inner: charpoly_flv(&self.inner) }
    }

    fn min_cycle_mean<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &min_cycle_mean(&Network::from_matrix(&self.inner)))
    }

    /// Elementary circuits as dicts with `vertices`, `weight` and `average`.
    #[pyo3(signature = (cap = 1_000_000))]
    fn circuits<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyList>> {
        let found = enumerate_circuits(&Network::from_matrix(&self.inner), cap).map_err(to_py_err)?;
        let dicts = found
            .iter()
            .map(|c| {
                let d = PyDict::new(py);
                d.set_item("vertices", c.vertices().to_vec())?;
                d.set_item("weight", rational_to_py(py, c.weight())?)?;
                d.set_item("average", rational_to_py(py, &c.average())?)?;
                Ok(d)
            })
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, dicts)
    }

    #[pyo3(signature = (cap = 1_000_000))]
    fn is_separated(&self, cap: usize) -> PyResult<bool> {
        separated_check(&Network::from_matrix(&self.inner), cap).map_err(to_py_err)
    }

    #[pyo3(signature = (subsets = 16, circuits = 1_000_000, exhaustive = 10))]
    fn coefficient_check<'py>(
        &self,
        py: Python<'py>,
        subsets: usize,
        circuits: usize,
        exhaustive: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let report = coefficient_check(&self.inner, &caps(subsets, circuits, exhaustive))
            .map_err(to_py_err)?;
        json_to_py(py, &report)
    }

    #[pyo3(signature = (subsets = 16, circuits = 1_000_000))]
    fn verify_separated_factorization<'py>(
        &self,
        py: Python<'py>,
        subsets: usize,
        circuits: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let report = verify_separated_factorization(&self.inner, &caps(subsets, circuits, 10))
            .map_err(to_py_err)?;
        json_to_py(py, &report)
    }

    #[pyo3(signature = (subsets = 16, circuits = 1_000_000))]
    fn verify_corollary_equivalence<'py>(
        &self,
        py: Python<'py>,
        subsets: usize,
        circuits: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let report = verify_corollary_equivalence(&self.inner, &caps(subsets, circuits, 10))
            .map_err(to_py_err)?;
        json_to_py(py, &report)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .cast::<PyMatrix>()
            .is_ok_and(|o| o.get().inner == self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix(order={})", self.inner.order())
    }
}

/// Polynomial `c_0⊗x^n ⊕ c_1⊗x^{n-1} ⊕ ⋯ ⊕ c_n`.
#[pyclass(name = "Polynomial", module = "minplus", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPolynomial {
    inner: MinPlusPolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Coefficients from the leading one down to the constant term.
    #[new]
    fn new(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let coeffs = coeffs.iter().map(value_from_py).collect::<PyResult<Vec<_>>>()?;
        let inner = MinPlusPolynomial::new(coeffs).map_err(to_py_err)?;
        Ok(PyPolynomial { inner })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = minplus::io::parse_polynomial(text).map_err(to_py_err)?;
        Ok(PyPolynomial { inner })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        values_to_py(py, self.inner.coeffs())
    }

    fn evaluate<'py>(&self, py: Python<'py>, x: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &self.inner.evaluate(&value_from_py(x)?))
    }

    fn canonicalize(&self) -> PyResult<Self> {
        let inner = self.inner.canonicalize().map_err(to_py_err)?;
        Ok(PyPolynomial { inner })
    }

    fn is_equivalent(&self, other: &PyPolynomial) -> bool {
        self.inner.is_equivalent(&other.inner)
    }

    fn factorize(&self) -> PyResult<PyFactorization> {
        let inner = self.inner.factorize().map_err(to_py_err)?;
        Ok(PyFactorization { inner })
    }

    fn min_root<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &self.inner.min_root().map_err(to_py_err)?)
    }

    /// `(x, y, slope_left, slope_right)` for every corner of the graph.
    fn breakpoints<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .breakpoints()
            .iter()
            .map(|b| {
                let t = (
                    rational_to_py(py, &b.x)?,
                    rational_to_py(py, &b.y)?,
                    b.slope_left,
                    b.slope_right,
                );
                Ok(t.into_pyobject(py)?.into_any())
            })
            .collect()
    }

    /// Breakpoints plus one point on each outer ray.
    fn plot_points<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .plot_points()
            .iter()
            .map(|(x, y)| {
                let t = (rational_to_py(py, x)?, rational_to_py(py, y)?);
                Ok(t.into_pyobject(py)?.into_any())
            })
            .collect()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .cast::<PyPolynomial>()
            .is_ok_and(|o| o.get().inner == self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

/// `(x ⊕ r_1)^{m_1} ⊗ ⋯ ⊗ x^r`.
#[pyclass(name = "Factorization", module = "minplus", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyFactorization {
    inner: Factorization,
}

#[pymethods]
impl PyFactorization {
    /// `(root, multiplicity)` pairs in increasing root order.
    #[getter]
    fn factors<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .factors()
            .iter()
            .map(|(r, m)| Ok((rational_to_py(py, r)?, *m).into_pyobject(py)?.into_any()))
            .collect()
    }

    #[getter]
    fn xpower(&self) -> usize {
        self.inner.xpower()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn min_root<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &self.inner.min_root())
    }

    fn expand(&self) -> PyPolynomial {
        PyPolynomial { inner: self.inner.expand() }
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .cast::<PyFactorization>()
            .is_ok_and(|o| o.get().inner == self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Factorization({})", self.inner)
    }
}

/// A matrix with at most `max_cycles` planted vertex-disjoint cycles on at
/// most `max_n` vertices. Returns `(matrix, cycles, averages)`.
#[pyfunction]
#[pyo3(signature = (seed, max_n = 8, max_cycles = 3))]
fn random_separated<'py>(
    py: Python<'py>,
    seed: u64,
    max_n: usize,
    max_cycles: usize,
) -> PyResult<Bound<'py, PyAny>> {
    if max_n == 0 {
        return Err(PyValueError::new_err("max_n must be at least 1"));
    }
    let inst = minplus::random_separated(&mut ChaCha8Rng::seed_from_u64(seed), max_n, max_cycles);
    let averages = inst
        .averages
        .iter()
        .map(|a| rational_to_py(py, a))
        .collect::<PyResult<Vec<_>>>()?;
    let matrix = PyMatrix { inner: inst.matrix };
    Ok((matrix, inst.cycles, averages).into_pyobject(py)?.into_any())
}

#[pymodule]
#[pyo3(name = "minplus")]
fn minplus_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyFactorization>()?;
    m.add_function(wrap_pyfunction!(random_separated, m)?)?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_module(f: impl FnOnce(Python<'_>, &Bound<'_, PyModule>)) {
        Python::attach(|py| {
            let m = PyModule::new(py, "minplus").unwrap();
            minplus_py(&m).unwrap();
            f(py, &m);
        });
    }

    #[test]
    fn values_round_trip() {
        Python::attach(|py| {
            for text in ["3", "-7/2", "inf"] {
                let v: MinPlus = text.parse().unwrap();
                let obj = value_to_py(py, &v).unwrap();
                assert_eq!(value_from_py(&obj).unwrap(), v);
            }
            assert_eq!(value_from_py(&py.None().into_bound(py)).unwrap(), MinPlus::Epsilon);
            let half = PyFloat::new(py, 0.5).into_any();
            assert_eq!(value_from_py(&half).unwrap(), MinPlus::ratio(1, 2));
            let nan = PyFloat::new(py, f64::NAN).into_any();
            assert!(value_from_py(&nan).is_err());
        });
    }

    #[test]
    fn worked_example_from_python() {
        with_module(|py, m| {
            let locals = PyDict::new(py);
            locals.set_item("mp", m).unwrap();
            let code = c"
a = mp.Matrix.worked_example()
g = a.charpoly_tropdet()
h = a.charpoly_flv()
result = (str(g.factorize()), str(h.factorize()), a.min_cycle_mean())
";
            py.run(code, None, Some(&locals)).unwrap();
            let result: (String, String, i64) = locals.get_item("result").unwrap().unwrap().extract().unwrap();
            assert_eq!(
                result,
                ("(x ⊕ 2)^3 ⊗ (x ⊕ 14) ⊗ x^3".into(), "(x ⊕ 2)^6 ⊗ (x ⊕ 3)".into(), 2)
            );
        });
    }

    #[test]
    fn errors_map_to_python_exceptions() {
        with_module(|py, m| {
            let locals = PyDict::new(py);
            locals.set_item("mp", m).unwrap();
            let code = c"
caught = []
try:
    mp.Matrix.worked_example().charpoly_tropdet(cap=3)
except mp.CapExceededError:
    caught.append('cap')
try:
    mp.Polynomial([1, 2]).factorize()
except ValueError:
    caught.append('monic')
try:
    mp.Matrix([[1, 2]])
except ValueError:
    caught.append('square')
";
            py.run(code, None, Some(&locals)).unwrap();
            let caught: Vec<String> = locals.get_item("caught").unwrap().unwrap().extract().unwrap();
            assert_eq!(caught, ["cap", "monic", "square"]);
        });
    }
}
