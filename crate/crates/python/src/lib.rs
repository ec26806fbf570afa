use std::path::PathBuf;
use std::str::FromStr;

use logdisc_core::cli::{self, Args, Command, InputSpec, Kind, Model as CoreModel};
use logdisc_core::error::Error;
use logdisc_core::inertia::SymMatrixQ;
use logdisc_core::oracle::{self, OracleOptions};
use logdisc_core::polyring::{parse_poly, Polynomial, Rational, VarTable};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};
use serde_json::Value;

create_exception!(logdisc, DegenerateError, PyException, "The parameter point is degenerate.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Degenerate(_) => DegenerateError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

/// `"u=1,a=-9/10"` or `{"u": 1, "a": "-9/10"}`.
fn params_string(params: Option<&Bound<'_, PyAny>>) -> PyResult<Option<String>> {
    let Some(p) = params else { return Ok(None) };
    if let Ok(s) = p.extract::<String>() {
        return Ok(Some(s));
    }
    let d = p.cast::<PyDict>()?;
    let mut parts = Vec::new();
    for (k, v) in d.iter() {
        parts.push(format!("{}={}", k.str()?, v.str()?));
    }
    Ok(Some(parts.join(",")))
}

fn rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s = v.str()?.to_string();
    Rational::from_str(s.trim()).map_err(|_| PyValueError::new_err(format!("not a rational number: {s}")))
}

/// A deformation read from the line-oriented input format.
#[pyclass(module = "logdisc", frozen)]
struct Model {
    text: String,
    basis: Option<Vec<String>>,
    spec: InputSpec,
    model: CoreModel,
}

#[pymethods]
impl Model {
    #[new]
    #[pyo3(signature = (text, basis=None))]
    fn new(text: String, basis: Option<Vec<String>>) -> PyResult<Self> {
        let mut spec = InputSpec::parse(&text).map_err(py_err)?;
        if let Some(b) = &basis {
            spec = spec.with_basis(b.clone()).map_err(py_err)?;
        }
        let model = spec.build().map_err(py_err)?;
        Ok(Model { text, basis, spec, model })
    }

    #[staticmethod]
    #[pyo3(signature = (path, basis=None))]
    fn from_file(path: PathBuf, basis: Option<Vec<String>>) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| PyValueError::new_err(format!("cannot read {}: {e}", path.display())))?;
        Model::new(text, basis)
    }

    /// `"hypersurface"` or `"ci"`.
    #[getter]
    fn kind(&self) -> &'static str {
        match self.spec.kind {
            Kind::Hypersurface => "hypersurface",
            Kind::CompleteIntersection => "ci",
        }
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.spec.variables.clone()
    }

    #[getter]
    fn params(&self) -> Vec<String> {
        self.spec.params.clone()
    }

    #[getter]
    fn mu(&self) -> usize {
        match &self.model {
            CoreModel::Hyper(h) => h.mu(),
            CoreModel::CI(c, _) => c.mu(),
        }
    }

    /// Runs a CLI command (`"tables"`, `"count"`, `"oracle-check"`, ...) and
    /// returns its output as nested dicts and lists.
    #[pyo3(signature = (command, params=None, ball=10.0, resolution=64))]
    fn run<'py>(
        &self,
        py: Python<'py>,
        command: &str,
        params: Option<&Bound<'py, PyAny>>,
        ball: f64,
        resolution: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let command = <Command as clap::ValueEnum>::from_str(command, true)
            .map_err(|_| PyValueError::new_err(format!("unknown command `{command}`")))?;
        let args = Args {
            command,
            input: PathBuf::new(),
            params: params_string(params)?,
            json: true,
            ball,
            resolution,
            basis: self.basis.as_ref().map(|b| b.join(",")),
        };
        let text = &self.text;
        let v = py.detach(|| cli::execute(&args, text)).map_err(py_err)?;
        to_py(py, &v)
    }

    /// The discriminant `det Sigma` (hypersurface) or `det P` (complete
    /// intersection) as a string.
    #[pyo3(signature = (params=None))]
    fn discriminant(&self, py: Python<'_>, params: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
        let cmd = if self.spec.kind == Kind::CompleteIntersection { "ci-discriminant" } else { "discriminant" };
        let key = if self.spec.kind == Kind::CompleteIntersection { "detP" } else { "detSigma" };
        let out = self.run(py, cmd, params, 10.0, 64)?;
        out.get_item(key)?.extract()
    }

    /// Number of real critical points at a fixed parameter point.
    fn count(&self, py: Python<'_>, params: &Bound<'_, PyAny>) -> PyResult<i64> {
        let cmd = if self.spec.kind == Kind::CompleteIntersection { "ci-count" } else { "count" };
        self.run(py, cmd, Some(params), 10.0, 64)?.get_item("count")?.extract()
    }

    fn __repr__(&self) -> String {
        format!("Model(kind={:?}, variables={:?}, params={:?})", self.kind(), self.spec.variables, self.spec.params)
    }
}

/// `(n_plus, n_minus, n_zero)` of a symmetric rational matrix.
#[pyfunction]
fn inertia(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<(usize, usize, usize)> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(rational).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    let t = SymMatrixQ::new(rows).map_err(py_err)?.inertia();
    Ok((t.n_plus, t.n_minus, t.n_zero))
}

fn numeric_poly(poly: &str, variables: &[String]) -> PyResult<Polynomial> {
    let vt = VarTable::new(variables, &[] as &[String]).map_err(py_err)?;
    parse_poly(poly, &vt).map_err(py_err)
}

/// Canonical form of a polynomial in the given variables and parameters.
#[pyfunction]
#[pyo3(signature = (poly, variables, params=Vec::new()))]
fn normalize(poly: &str, variables: Vec<String>, params: Vec<String>) -> PyResult<String> {
    let vt = VarTable::new(&variables, &params).map_err(py_err)?;
    Ok(parse_poly(poly, &vt).map_err(py_err)?.to_string())
}

/// Real critical points of a numeric polynomial inside a ball, found by
/// multistart Newton. Each point is a dict with `coords`, `value` and
/// `morse_index`.
#[pyfunction]
#[pyo3(signature = (poly, variables, ball=10.0, expected=1))]
fn critical_points<'py>(
    py: Python<'py>,
    poly: &str,
    variables: Vec<String>,
    ball: f64,
    expected: usize,
) -> PyResult<Bound<'py, PyList>> {
    let f = numeric_poly(poly, &variables)?;
    let opts = OracleOptions::defaults(expected.max(1), ball);
    let report = py
        .detach(|| oracle::find_critical_points(&f, &[], ball, expected, &opts))
        .map_err(py_err)?;
    let out = PyList::empty(py);
    for p in &report.points {
        let d = PyDict::new(py);
        d.set_item("coords", p.coords.clone())?;
        d.set_item("value", p.value)?;
        d.set_item("morse_index", p.morse_index)?;
        out.append(d)?;
    }
    Ok(out)
}

/// Grid estimate of `(chi{f >= 0}, chi{f <= 0}, chi{f = 0})` inside a disk
/// (one or two variables).
#[pyfunction]
#[pyo3(signature = (poly, variables, ball=10.0, resolution=64, max_resolution=4096))]
fn grid_euler(
    py: Python<'_>,
    poly: &str,
    variables: Vec<String>,
    ball: f64,
    resolution: usize,
    max_resolution: usize,
) -> PyResult<(i64, i64, i64)> {
    let f = numeric_poly(poly, &variables)?;
    let g = py
        .detach(|| oracle::grid_euler(&f, ball, resolution, max_resolution))
        .map_err(py_err)?;
    Ok((g.chi_ge, g.chi_le, g.chi_eq))
}

#[pymodule]
fn logdisc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Model>()?;
    m.add_function(wrap_pyfunction!(inertia, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(critical_points, m)?)?;
    m.add_function(wrap_pyfunction!(grid_euler, m)?)?;
    m.add("DegenerateError", m.py().get_type::<DegenerateError>())?;
    Ok(())
}
