//! A y-invariant 2D problem and the cell-centred line it should reduce to.

use super::{dense_solve, max_abs_diff, probe_affine, Lcg};
use fluxcf::flux1d::{peclet_data, select_stencil, PecletData, SMALL_PECLET_CUTOFF};
use fluxcf::mesh::build_mesh_2d;
use fluxcf::poisson::{BoundaryValues2D, InterfaceVelocityField2D};
use fluxcf::transport2d::solve_transport_2d;
use fluxcf::{FluxVariant, Mesh2D, SchemeParams};

/// A cell-centred line along x with the 2D edge conventions: half spacing,
/// `α = 0` and, where advection dominates, the shift to the edge on the two
/// boundary interfaces.
pub struct Line {
    pub dx: f64,
    pub v: Vec<f64>,
    pub dvdx: Vec<f64>,
    pub s: Vec<f64>,
    pub bc: (f64, f64),
}

impl Line {
    pub fn fluxes(&self, params: &SchemeParams, u: &[f64]) -> Vec<f64> {
        let n = u.len();
        (0..=n)
            .map(|i| {
                let boundary = i == 0 || i == n;
                let h = if boundary { 0.5 * self.dx } else { self.dx };
                let p = peclet_data(
                    self.v[i],
                    self.dvdx[i],
                    h,
                    params.mu,
                    params.diffusion,
                    params.limiter,
                );
                let p = if boundary {
                    PecletData::new(p.pe, p.q, 0.0)
                } else {
                    p
                };
                let st = select_stencil(params.variant, &p, params.diffusion, h).unwrap();
                let left = if i == 0 { self.bc.0 } else { u[i - 1] };
                let right = if i == n { self.bc.1 } else { u[i] };
                let sl = self.s[i.saturating_sub(1)];
                let sr = self.s[i.min(n - 1)];
                let mid = st.flux(left, right, sl, sr);
                let shift = if p.pe.abs() >= SMALL_PECLET_CUTOFF {
                    0.5 * h
                } else {
                    0.0
                };
                if i == 0 {
                    mid - shift * sl
                } else if i == n {
                    mid + shift * sr
                } else {
                    mid
                }
            })
            .collect()
    }

    pub fn residual(&self, params: &SchemeParams, u: &[f64]) -> Vec<f64> {
        let f = self.fluxes(params, u);
        (0..u.len())
            .map(|i| f[i + 1] - f[i] - self.dx * self.s[i])
            .collect()
    }

    pub fn solve(&self, params: &SchemeParams, n: usize) -> Vec<f64> {
        let (a, b) = probe_affine(n, |u| self.residual(params, u));
        dense_solve(&a, &b)
    }
}

pub struct Reduction {
    pub mesh: Mesh2D,
    pub line: Line,
    pub vel: InterfaceVelocityField2D,
    pub source: Vec<f64>,
}

pub fn y_invariant_problem(seed: u64, params: &SchemeParams) -> Reduction {
    let mut rng = Lcg::new(seed);
    let mesh = build_mesh_2d(6, 5, 1.0, 1.0).unwrap();
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let scale = params.mu / params.diffusion;
    let mut v = Vec::new();
    let mut dvdx = Vec::new();
    for i in 0..=nx {
        let h = if i == 0 || i == nx {
            0.5 * mesh.dx()
        } else {
            mesh.dx()
        };
        let pe = rng.uniform(20.0, 45.0);
        v.push(pe / (scale * h));
        dvdx.push(rng.uniform(-0.5, 0.5) * pe.abs() * 2.0 / (scale * h * h));
    }
    let s: Vec<f64> = (0..nx).map(|_| rng.uniform(-2.0, 2.0)).collect();
    let mut vel = InterfaceVelocityField2D::constant(&mesh, 0.0, 0.0);
    let mut source = vec![0.0; mesh.n_cells()];
    for k in 0..ny {
        for i in 0..=nx {
            let e = mesh.vertical_edge_index(i, k);
            vel.v_vertical[e] = v[i];
            vel.dvdx_vertical[e] = dvdx[i];
        }
        for i in 0..nx {
            source[mesh.index(i, k)] = s[i];
        }
    }
    let line = Line {
        dx: mesh.dx(),
        v,
        dvdx,
        s,
        bc: (0.3, -0.8),
    };
    Reduction {
        mesh,
        line,
        vel,
        source,
    }
}

pub fn bc_for(r: &Reduction, row: &[f64]) -> BoundaryValues2D {
    let ny = r.mesh.ny();
    BoundaryValues2D {
        west: vec![r.line.bc.0; ny],
        east: vec![r.line.bc.1; ny],
        south: row.to_vec(),
        north: row.to_vec(),
    }
}

/// Largest deviation of any 2D row from the line solution.
pub fn reduction_deviation(variant: FluxVariant) -> f64 {
    let params = SchemeParams::new(variant, 1.0, 0.01);
    let r = y_invariant_problem(5, &params);
    let u = r.line.solve(&params, r.mesh.nx());
    let sol = solve_transport_2d(&r.mesh, &r.vel, &r.source, &bc_for(&r, &u), &params).unwrap();
    let nx = r.mesh.nx();
    (0..r.mesh.ny())
        .map(|k| max_abs_diff(&sol.values[k * nx..(k + 1) * nx], &u))
        .fold(0.0, f64::max)
}
