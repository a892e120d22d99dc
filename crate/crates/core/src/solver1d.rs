//! Assembly and solution of the 1D finite-volume balance
//! `f_{j+1/2} - f_{j-1/2} = Δx·s_j` at the interior nodes.

use crate::error::{Error, Result};
use crate::flux1d::{peclet_data, select_stencil, FluxStencil, FluxVariant, Limiter};
use crate::mesh::Mesh1D;
use crate::poisson::InterfaceVelocityField1D;

pub use crate::linalg::{solve_tridiagonal, TridiagonalSystem};

const RESIDUAL_TOL: f64 = 1e-12;

/// Scheme parameters shared by the 1D and 2D solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub variant: FluxVariant,
    pub limiter: Limiter,
    pub mu: f64,
    pub diffusion: f64,
}

impl SchemeParams {
    pub fn new(variant: FluxVariant, mu: f64, diffusion: f64) -> Self {
        Self {
            variant,
            limiter: Limiter::default(),
            mu,
            diffusion,
        }
    }

    pub fn with_limiter(self, limiter: Limiter) -> Self {
        Self { limiter, ..self }
    }

    pub(crate) fn check(&self) -> Result<()> {
        if !(self.diffusion > 0.0 && self.diffusion.is_finite()) {
            return Err(Error::Config(format!(
                "diffusion must be positive, got {}",
                self.diffusion
            )));
        }
        if !self.mu.is_finite() {
            return Err(Error::Config(format!("mu must be finite, got {}", self.mu)));
        }
        Ok(())
    }
}

/// Nodal concentrations, boundary entries included.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSolution1D {
    pub mesh: Mesh1D,
    pub values: Vec<f64>,
}

fn expect_len(what: &'static str, got: usize, expected: usize) -> Result<()> {
    if got == expected {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            what,
            got,
            expected,
        })
    }
}

/// The stencil at every interface, in interface order.
pub fn interface_stencils_1d(
    mesh: &Mesh1D,
    vel: &InterfaceVelocityField1D,
    params: &SchemeParams,
) -> Result<Vec<FluxStencil>> {
    params.check()?;
    expect_len("velocity", vel.v.len(), mesh.n_interfaces())?;
    expect_len("velocity derivative", vel.dvdx.len(), mesh.n_interfaces())?;
    let dx = mesh.dx();
    (0..mesh.n_interfaces())
        .map(|i| {
            let p = peclet_data(
                vel.v[i],
                vel.dvdx[i],
                dx,
                params.mu,
                params.diffusion,
                params.limiter,
            );
            select_stencil(params.variant, &p, params.diffusion, dx).map_err(|e| e.at_interface(i))
        })
        .collect()
}

/// Interface fluxes of a nodal solution.
pub fn interface_fluxes(stencils: &[FluxStencil], c: &[f64], s: &[f64]) -> Vec<f64> {
    stencils
        .iter()
        .enumerate()
        .map(|(i, st)| st.flux(c[i], c[i + 1], s[i], s[i + 1]))
        .collect()
}

fn assemble_from_stencils(
    mesh: &Mesh1D,
    stencils: &[FluxStencil],
    source: &[f64],
    bc: (f64, f64),
) -> TridiagonalSystem {
    let n = mesh.n_cells();
    let dx = mesh.dx();
    let mut sys = TridiagonalSystem::zeros(n - 1);
    for j in mesh.interior() {
        let r = j - 1;
        let east = &stencils[j];
        let west = &stencils[j - 1];
        sys.sub[r] = -west.a_left;
        sys.main[r] = east.a_left - west.a_right;
        sys.sup[r] = east.a_right;
        sys.rhs[r] = dx * source[j] - east.inhomogeneous(source[j], source[j + 1])
            + west.inhomogeneous(source[j - 1], source[j]);
    }
    sys.rhs[0] += stencils[0].a_left * bc.0;
    sys.rhs[n - 2] -= stencils[n - 1].a_right * bc.1;
    sys.sub[0] = 0.0;
    sys.sup[n - 2] = 0.0;
    sys
}

/// Tridiagonal system for the `N - 1` interior unknowns. Boundary values and
/// all source-weight terms go to the right-hand side.
pub fn assemble_1d(
    mesh: &Mesh1D,
    vel: &InterfaceVelocityField1D,
    source: &[f64],
    bc: (f64, f64),
    params: &SchemeParams,
) -> Result<TridiagonalSystem> {
    expect_len("transport source", source.len(), mesh.n_nodes())?;
    let stencils = interface_stencils_1d(mesh, vel, params)?;
    Ok(assemble_from_stencils(mesh, &stencils, source, bc))
}

pub fn solve_transport_1d(
    mesh: &Mesh1D,
    vel: &InterfaceVelocityField1D,
    source: &[f64],
    bc: (f64, f64),
    params: &SchemeParams,
) -> Result<DiscreteSolution1D> {
    let sys = assemble_1d(mesh, vel, source, bc, params)?;
    let interior = solve_tridiagonal(&sys)?;
    let residual = sys.relative_residual(&interior);
    if residual.is_nan() || residual > RESIDUAL_TOL {
        return Err(Error::Solver { residual });
    }
    let mut values = Vec::with_capacity(mesh.n_nodes());
    values.push(bc.0);
    values.extend(interior);
    values.push(bc.1);
    Ok(DiscreteSolution1D {
        mesh: mesh.clone(),
        values,
    })
}
