//! Python bindings for the `fluxcf` schemes and convergence studies.

use fluxcf::cases::{case_by_id, CaseDefinition};
use fluxcf::flux1d::{peclet_data, select_stencil};
use fluxcf::harness::{run_level, write_csv, ConvergenceReport, Solution};
use fluxcf::mesh::build_mesh_1d;
use fluxcf::poisson::InterfaceVelocityField1D;
use fluxcf::solver1d::solve_transport_1d;
use fluxcf::{specfun, Error, FluxVariant, Limiter, SchemeParams};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    if e.is_config() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn parse_variant(name: &str) -> PyResult<FluxVariant> {
    name.parse().map_err(to_py)
}

fn parse_limiter(name: &str) -> PyResult<Limiter> {
    match name {
        "off" => Ok(Limiter::Off),
        "ratio" => Ok(Limiter::Ratio),
        "cutoff" => Ok(Limiter::RatioWithCutoff),
        other => Err(PyValueError::new_err(format!(
            "unknown limiter {other:?}; expected off, ratio or cutoff"
        ))),
    }
}

/// `B(z) = z / (e^z - 1)`.
#[pyfunction]
fn bernoulli(z: f64) -> PyResult<f64> {
    specfun::bernoulli(z).map_err(to_py)
}

#[pyfunction]
fn w_weight(z: f64) -> PyResult<f64> {
    specfun::w_weight(z).map_err(to_py)
}

#[pyfunction]
fn w_tilde(z: f64, q: f64) -> PyResult<f64> {
    specfun::w_tilde(z, q).map_err(to_py)
}

/// Péclet data at one interface.
#[pyclass(name = "PecletData", frozen)]
struct PyPecletData {
    #[pyo3(get)]
    pe: f64,
    #[pyo3(get)]
    q: f64,
    #[pyo3(get)]
    alpha: f64,
    #[pyo3(get)]
    pe_plus: f64,
    #[pyo3(get)]
    pe_minus: f64,
}

#[pymethods]
impl PyPecletData {
    #[new]
    #[pyo3(signature = (v, dvdx, dx, mu, diffusion, limiter = "cutoff"))]
    fn new(v: f64, dvdx: f64, dx: f64, mu: f64, diffusion: f64, limiter: &str) -> PyResult<Self> {
        let p = peclet_data(v, dvdx, dx, mu, diffusion, parse_limiter(limiter)?);
        Ok(Self {
            pe: p.pe,
            q: p.q,
            alpha: p.alpha,
            pe_plus: p.pe_plus,
            pe_minus: p.pe_minus,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "PecletData(pe={}, q={}, alpha={}, pe_plus={}, pe_minus={})",
            self.pe, self.q, self.alpha, self.pe_plus, self.pe_minus
        )
    }
}

/// Flux coefficients `[a_left, a_right, b_left, b_right]` of one interface.
#[pyfunction]
#[pyo3(signature = (variant, v, dvdx, dx, mu, diffusion, limiter = "cutoff"))]
fn flux_stencil(
    variant: &str,
    v: f64,
    dvdx: f64,
    dx: f64,
    mu: f64,
    diffusion: f64,
    limiter: &str,
) -> PyResult<[f64; 4]> {
    let p = peclet_data(v, dvdx, dx, mu, diffusion, parse_limiter(limiter)?);
    select_stencil(parse_variant(variant)?, &p, diffusion, dx)
        .map(|s| s.entries())
        .map_err(to_py)
}

/// Solves the 1D transport problem on `[0, length]` with `n` cells, given
/// interface velocities and derivatives and nodal sources. Returns nodal values.
#[pyfunction]
#[pyo3(signature = (n, length, v, dvdx, source, bc, variant, mu, diffusion, limiter = "cutoff"))]
#[allow(clippy::too_many_arguments)]
fn solve_1d(
    n: usize,
    length: f64,
    v: Vec<f64>,
    dvdx: Vec<f64>,
    source: Vec<f64>,
    bc: (f64, f64),
    variant: &str,
    mu: f64,
    diffusion: f64,
    limiter: &str,
) -> PyResult<Vec<f64>> {
    let mesh = build_mesh_1d(n, length).map_err(to_py)?;
    let params = SchemeParams::new(parse_variant(variant)?, mu, diffusion)
        .with_limiter(parse_limiter(limiter)?);
    let vel = InterfaceVelocityField1D { v, dvdx };
    solve_transport_1d(&mesh, &vel, &source, bc, &params)
        .map(|s| s.values)
        .map_err(to_py)
}

/// One manufactured problem.
#[pyclass(name = "Case", frozen)]
struct PyCase {
    inner: CaseDefinition,
}

#[pymethods]
impl PyCase {
    #[new]
    #[pyo3(signature = (id, diffusion, amp = None))]
    fn new(id: u8, diffusion: f64, amp: Option<f64>) -> PyResult<Self> {
        case_by_id(id, diffusion, amp)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    #[getter]
    fn id(&self) -> u8 {
        self.inner.id()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn diffusion(&self) -> f64 {
        self.inner.diffusion
    }

    #[getter]
    fn amp(&self) -> Option<f64> {
        self.inner.amp()
    }

    fn default_levels(&self) -> Vec<usize> {
        self.inner.default_levels()
    }

    /// Relative L2 error and discrete solution at one level. In 2D the
    /// values are row-major over cell centres.
    #[pyo3(signature = (variant, n, limiter = "cutoff"))]
    fn run_level(&self, variant: &str, n: usize, limiter: &str) -> PyResult<(f64, Vec<f64>)> {
        let level = run_level(
            &self.inner,
            parse_variant(variant)?,
            parse_limiter(limiter)?,
            n,
        )
        .map_err(to_py)?;
        let values = match level.solution {
            Solution::OneD(s) => s.values,
            Solution::TwoD(s) => s.values,
        };
        Ok((level.error, values))
    }

    #[pyo3(signature = (variant, levels, limiter = "cutoff"))]
    fn converge(
        &self,
        variant: &str,
        levels: Vec<usize>,
        limiter: &str,
    ) -> PyResult<PyConvergenceReport> {
        fluxcf::run_convergence(
            &self.inner,
            parse_variant(variant)?,
            &levels,
            parse_limiter(limiter)?,
        )
        .map(|inner| PyConvergenceReport { inner })
        .map_err(to_py)
    }
}

#[pyclass(name = "ConvergenceReport", frozen)]
struct PyConvergenceReport {
    inner: ConvergenceReport,
}

#[pymethods]
impl PyConvergenceReport {
    /// `(N, error, order)` per level; `order` is `None` on the first row.
    #[getter]
    fn rows(&self) -> Vec<(usize, f64, Option<f64>)> {
        self.inner
            .rows
            .iter()
            .map(|r| (r.n, r.error, r.order))
            .collect()
    }

    #[getter]
    fn final_order(&self) -> Option<f64> {
        self.inner.final_order()
    }

    fn to_csv(&self) -> String {
        let mut out = Vec::new();
        write_csv(&self.inner, &mut out).expect("writing to memory");
        String::from_utf8(out).expect("csv is ascii")
    }
}

#[pymodule]
fn fluxcf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(w_weight, m)?)?;
    m.add_function(wrap_pyfunction!(w_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(flux_stencil, m)?)?;
    m.add_function(wrap_pyfunction!(solve_1d, m)?)?;
    m.add_class::<PyPecletData>()?;
    m.add_class::<PyCase>()?;
    m.add_class::<PyConvergenceReport>()?;
    Ok(())
}
