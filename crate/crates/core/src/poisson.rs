//! Central-difference Poisson solves for the potential and reconstruction
//! of interface velocities `V = -∇φ` with their normal derivatives.

use crate::error::{Error, Result};
use crate::linalg::{solve_tridiagonal, BandedMatrix, TridiagonalSystem};
use crate::mesh::{Mesh1D, Mesh2D};

const RESIDUAL_TOL_1D: f64 = 1e-13;
const RESIDUAL_TOL_2D: f64 = 1e-10;

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

/// Nodal potential, boundary entries included.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField1D {
    pub mesh: Mesh1D,
    pub values: Vec<f64>,
}

/// Velocity and its derivative at every interface.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceVelocityField1D {
    pub v: Vec<f64>,
    pub dvdx: Vec<f64>,
}

impl InterfaceVelocityField1D {
    /// Uniform velocity with zero derivative.
    pub fn constant(mesh: &Mesh1D, v: f64) -> Self {
        Self {
            v: vec![v; mesh.n_interfaces()],
            dvdx: vec![0.0; mesh.n_interfaces()],
        }
    }
}

/// Solves `-φ'' = s_P` with `φ(0) = bc.0`, `φ(L) = bc.1`.
pub fn solve_poisson_1d(mesh: &Mesh1D, source: &[f64], bc: (f64, f64)) -> Result<PotentialField1D> {
    expect_len("poisson source", source.len(), mesh.n_nodes())?;
    let n = mesh.n_cells();
    let h2 = mesh.dx() * mesh.dx();
    let mut sys = TridiagonalSystem::zeros(n - 1);
    for j in mesh.interior() {
        let r = j - 1;
        sys.sub[r] = -1.0;
        sys.main[r] = 2.0;
        sys.sup[r] = -1.0;
        sys.rhs[r] = h2 * source[j];
    }
    sys.rhs[0] += bc.0;
    sys.rhs[n - 2] += bc.1;
    let interior = solve_tridiagonal(&sys)?;
    let residual = sys.relative_residual(&interior);
    if residual > RESIDUAL_TOL_1D {
        return Err(Error::Solver { residual });
    }
    let mut values = Vec::with_capacity(n + 1);
    values.push(bc.0);
    values.extend(interior);
    values.push(bc.1);
    Ok(PotentialField1D {
        mesh: mesh.clone(),
        values,
    })
}

/// `v = -(φ_{j+1} - φ_j)/Δx`, `dvdx = (s_{P,j} + s_{P,j+1})/2`.
pub fn reconstruct_velocity_1d(
    phi: &PotentialField1D,
    source: &[f64],
) -> Result<InterfaceVelocityField1D> {
    let mesh = &phi.mesh;
    expect_len("potential", phi.values.len(), mesh.n_nodes())?;
    expect_len("poisson source", source.len(), mesh.n_nodes())?;
    let dx = mesh.dx();
    let v = phi.values.windows(2).map(|w| -(w[1] - w[0]) / dx).collect();
    let dvdx = source.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    Ok(InterfaceVelocityField1D { v, dvdx })
}

/// Dirichlet data at the midpoints of the boundary edges.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryValues2D {
    /// `x = 0`, one per cell row.
    pub west: Vec<f64>,
    /// `x = lx`, one per cell row.
    pub east: Vec<f64>,
    /// `y = 0`, one per cell column.
    pub south: Vec<f64>,
    /// `y = ly`, one per cell column.
    pub north: Vec<f64>,
}

impl BoundaryValues2D {
    pub fn sample(mesh: &Mesh2D, f: impl Fn(f64, f64) -> f64) -> Self {
        let (lx, ly) = (mesh.lx(), mesh.ly());
        Self {
            west: (0..mesh.ny()).map(|k| f(0.0, mesh.center_y(k))).collect(),
            east: (0..mesh.ny()).map(|k| f(lx, mesh.center_y(k))).collect(),
            south: (0..mesh.nx()).map(|i| f(mesh.center_x(i), 0.0)).collect(),
            north: (0..mesh.nx()).map(|i| f(mesh.center_x(i), ly)).collect(),
        }
    }

    pub fn zeros(mesh: &Mesh2D) -> Self {
        Self::sample(mesh, |_, _| 0.0)
    }

    fn check(&self, mesh: &Mesh2D) -> Result<()> {
        expect_len("west boundary", self.west.len(), mesh.ny())?;
        expect_len("east boundary", self.east.len(), mesh.ny())?;
        expect_len("south boundary", self.south.len(), mesh.nx())?;
        expect_len("north boundary", self.north.len(), mesh.nx())
    }
}

/// Cell-centre potential with its boundary data.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField2D {
    pub mesh: Mesh2D,
    pub values: Vec<f64>,
    pub boundary: BoundaryValues2D,
}

/// Normal velocity and normal derivative on every edge.
///
/// Boundary-edge velocities come from the half-spacing difference between
/// the boundary value and the adjacent cell centre.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceVelocityField2D {
    /// `V₁` on vertical edges, index `i + (nx+1)k`.
    pub v_vertical: Vec<f64>,
    /// `∂V₁/∂x` on vertical edges.
    pub dvdx_vertical: Vec<f64>,
    /// `V₂` on horizontal edges, index `i + nx·k`.
    pub v_horizontal: Vec<f64>,
    /// `∂V₂/∂y` on horizontal edges.
    pub dvdy_horizontal: Vec<f64>,
}

impl InterfaceVelocityField2D {
    pub fn constant(mesh: &Mesh2D, v1: f64, v2: f64) -> Self {
        Self {
            v_vertical: vec![v1; mesh.n_vertical_edges()],
            dvdx_vertical: vec![0.0; mesh.n_vertical_edges()],
            v_horizontal: vec![v2; mesh.n_horizontal_edges()],
            dvdy_horizontal: vec![0.0; mesh.n_horizontal_edges()],
        }
    }
}

/// Five-point Poisson solve on cell centres, Dirichlet data imposed at the
/// boundary-edge midpoints at distance `Δ/2`.
pub fn solve_poisson_2d(
    mesh: &Mesh2D,
    source: &[f64],
    bc: BoundaryValues2D,
) -> Result<PotentialField2D> {
    expect_len("poisson source", source.len(), mesh.n_cells())?;
    bc.check(mesh)?;
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let wx = 1.0 / (mesh.dx() * mesh.dx());
    let wy = 1.0 / (mesh.dy() * mesh.dy());
    let n = mesh.n_cells();
    let mut a = BandedMatrix::zeros(n, nx, nx);
    let mut rhs = source.to_vec();
    // Kept for the residual check; the banded LU overwrites its copy.
    let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::with_capacity(5); n];
    for k in 0..ny {
        for i in 0..nx {
            let r = mesh.index(i, k);
            let mut diag = 0.0;
            let mut couple = |c: Option<usize>, w: f64, g: f64, rhs: &mut [f64]| match c {
                Some(c) => {
                    diag += w;
                    rows[r].push((c, -w));
                }
                None => {
                    diag += 2.0 * w;
                    rhs[r] += 2.0 * w * g;
                }
            };
            couple((i > 0).then(|| r - 1), wx, bc.west[k], &mut rhs);
            couple((i + 1 < nx).then(|| r + 1), wx, bc.east[k], &mut rhs);
            couple((k > 0).then(|| r - nx), wy, bc.south[i], &mut rhs);
            couple((k + 1 < ny).then(|| r + nx), wy, bc.north[i], &mut rhs);
            rows[r].push((r, diag));
        }
    }
    for (r, row) in rows.iter().enumerate() {
        for &(c, v) in row {
            a.add(r, c, v);
        }
    }
    let values = a.solve(&rhs)?;
    let residual = sparse_relative_residual(&rows, &values, &rhs);
    if residual > RESIDUAL_TOL_2D {
        return Err(Error::Solver { residual });
    }
    Ok(PotentialField2D {
        mesh: mesh.clone(),
        values,
        boundary: bc,
    })
}

pub(crate) fn sparse_relative_residual(rows: &[Vec<(usize, f64)>], x: &[f64], b: &[f64]) -> f64 {
    let mut r_max: f64 = 0.0;
    let mut a_norm: f64 = 0.0;
    for (r, row) in rows.iter().enumerate() {
        let ax: f64 = row.iter().map(|&(c, v)| v * x[c]).sum();
        r_max = r_max.max((ax - b[r]).abs());
        a_norm = a_norm.max(row.iter().map(|&(_, v)| v.abs()).sum());
    }
    let x_norm = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let b_norm = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = b_norm.max(a_norm * x_norm);
    if scale == 0.0 {
        r_max
    } else {
        r_max / scale
    }
}

/// Derivative along a line of `m + 1` edge values, `m ≥ 2` cells.
/// Central differences where both neighbours are interior edges, one-sided
/// next to the boundary; boundary edges copy their interior neighbour.
fn edge_derivatives(v: &[f64], h: f64) -> Vec<f64> {
    let m = v.len() - 1;
    let mut d = vec![0.0; m + 1];
    for i in 1..m {
        d[i] = if i >= 2 && i + 2 <= m {
            (v[i + 1] - v[i - 1]) / (2.0 * h)
        } else if i + 2 <= m {
            (v[i + 1] - v[i]) / h
        } else if i >= 2 {
            (v[i] - v[i - 1]) / h
        } else {
            0.0
        };
    }
    d[0] = d[1];
    d[m] = d[m - 1];
    d
}

pub fn reconstruct_velocity_2d(phi: &PotentialField2D) -> Result<InterfaceVelocityField2D> {
    let mesh = &phi.mesh;
    expect_len("potential", phi.values.len(), mesh.n_cells())?;
    phi.boundary.check(mesh)?;
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let (dx, dy) = (mesh.dx(), mesh.dy());
    let p = |i: usize, k: usize| phi.values[mesh.index(i, k)];
    let bc = &phi.boundary;

    let mut v_vertical = vec![0.0; mesh.n_vertical_edges()];
    let mut dvdx_vertical = vec![0.0; mesh.n_vertical_edges()];
    for k in 0..ny {
        let line: Vec<f64> = (0..=nx)
            .map(|i| {
                if i == 0 {
                    -(p(0, k) - bc.west[k]) / (0.5 * dx)
                } else if i == nx {
                    -(bc.east[k] - p(nx - 1, k)) / (0.5 * dx)
                } else {
                    -(p(i, k) - p(i - 1, k)) / dx
                }
            })
            .collect();
        let deriv = edge_derivatives(&line, dx);
        for i in 0..=nx {
            let e = mesh.vertical_edge_index(i, k);
            v_vertical[e] = line[i];
            dvdx_vertical[e] = deriv[i];
        }
    }

    let mut v_horizontal = vec![0.0; mesh.n_horizontal_edges()];
    let mut dvdy_horizontal = vec![0.0; mesh.n_horizontal_edges()];
    for i in 0..nx {
        let line: Vec<f64> = (0..=ny)
            .map(|k| {
                if k == 0 {
                    -(p(i, 0) - bc.south[i]) / (0.5 * dy)
                } else if k == ny {
                    -(bc.north[i] - p(i, ny - 1)) / (0.5 * dy)
                } else {
                    -(p(i, k) - p(i, k - 1)) / dy
                }
            })
            .collect();
        let deriv = edge_derivatives(&line, dy);
        for k in 0..=ny {
            let e = mesh.horizontal_edge_index(i, k);
            v_horizontal[e] = line[k];
            dvdy_horizontal[e] = deriv[k];
        }
    }

    Ok(InterfaceVelocityField2D {
        v_vertical,
        dvdx_vertical,
        v_horizontal,
        dvdy_horizontal,
    })
}
