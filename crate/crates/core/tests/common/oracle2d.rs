//! Cell residuals of the 2D scheme written out edge by edge.

use super::Lcg;
use fluxcf::flux1d::{peclet_data, select_stencil, PecletData, SMALL_PECLET_CUTOFF};
use fluxcf::mesh::build_mesh_2d;
use fluxcf::poisson::{BoundaryValues2D, InterfaceVelocityField2D};
use fluxcf::{Mesh2D, SchemeParams};

/// Velocity with `|pe| ≥ 20` and `|q| ≤ |pe|/2`, or a small one.
pub fn sample_velocity(rng: &mut Lcg, h: f64, params: &SchemeParams) -> (f64, f64) {
    let scale = params.mu / params.diffusion;
    if rng.uniform(0.0, 1.0) < 0.25 {
        return (rng.uniform(-1.0, 1.0) / (scale * h), rng.uniform(-1.0, 1.0));
    }
    let pe = rng.uniform(20.0, 50.0)
        * if rng.uniform(0.0, 1.0) < 0.5 {
            -1.0
        } else {
            1.0
        };
    let q = rng.uniform(-0.5, 0.5) * pe.abs();
    (pe / (scale * h), 2.0 * q / (scale * h * h))
}

pub struct Problem2D {
    pub mesh: Mesh2D,
    pub vel: InterfaceVelocityField2D,
    pub source: Vec<f64>,
    pub bc: BoundaryValues2D,
}

pub fn random_problem_2d(seed: u64, params: &SchemeParams) -> Problem2D {
    let mut rng = Lcg::new(seed);
    let mesh = build_mesh_2d(3, 3, 1.0, 1.0).unwrap();
    let mut vel = InterfaceVelocityField2D::constant(&mesh, 0.0, 0.0);
    for e in 0..mesh.n_vertical_edges() {
        let (v, d) = sample_velocity(&mut rng, mesh.dx(), params);
        vel.v_vertical[e] = v;
        vel.dvdx_vertical[e] = d;
    }
    for e in 0..mesh.n_horizontal_edges() {
        let (v, d) = sample_velocity(&mut rng, mesh.dy(), params);
        vel.v_horizontal[e] = v;
        vel.dvdy_horizontal[e] = d;
    }
    let source = (0..9).map(|_| rng.uniform(-2.0, 2.0)).collect();
    let bc = BoundaryValues2D::sample(&mesh, |x, y| 1.0 + x - 0.5 * y * y);
    Problem2D {
        mesh,
        vel,
        source,
        bc,
    }
}

/// Cell residuals `F_E - F_W + F_N - F_S - ΔxΔy·s` written out edge by edge.
pub fn residual_2d(pb: &Problem2D, params: &SchemeParams, c: &[f64]) -> Vec<f64> {
    let m = &pb.mesh;
    let (nx, ny, dx, dy) = (m.nx(), m.ny(), m.dx(), m.dy());
    let area = dx * dy;
    let cell = |i: usize, k: usize| c[k * nx + i];
    let stencil = |v: f64, dv: f64, h: f64, boundary: bool| {
        let p = peclet_data(v, dv, h, params.mu, params.diffusion, params.limiter);
        let p = if boundary {
            PecletData::new(p.pe, p.q, 0.0)
        } else {
            p
        };
        (
            select_stencil(params.variant, &p, params.diffusion, h).unwrap(),
            p.pe,
        )
    };
    // Vertical edge (i, k): left and right values, stencil and spacing.
    let vertical = |i: usize, k: usize| {
        let e = k * (nx + 1) + i;
        let boundary = i == 0 || i == nx;
        let h = if boundary { 0.5 * dx } else { dx };
        let left = if i == 0 {
            pb.bc.west[k]
        } else {
            cell(i - 1, k)
        };
        let right = if i == nx { pb.bc.east[k] } else { cell(i, k) };
        (
            stencil(pb.vel.v_vertical[e], pb.vel.dvdx_vertical[e], h, boundary),
            left,
            right,
            h,
        )
    };
    let horizontal = |i: usize, k: usize| {
        let e = k * nx + i;
        let boundary = k == 0 || k == ny;
        let h = if boundary { 0.5 * dy } else { dy };
        let low = if k == 0 {
            pb.bc.south[i]
        } else {
            cell(i, k - 1)
        };
        let high = if k == ny { pb.bc.north[i] } else { cell(i, k) };
        (
            stencil(
                pb.vel.v_horizontal[e],
                pb.vel.dvdy_horizontal[e],
                h,
                boundary,
            ),
            low,
            high,
            h,
        )
    };
    let hom_v = |i, k| {
        let ((st, _), l, r, _) = vertical(i, k);
        dy * (st.a_left * l + st.a_right * r)
    };
    let hom_h = |i, k| {
        let ((st, _), l, r, _) = horizontal(i, k);
        dx * (st.a_left * l + st.a_right * r)
    };
    let s = |i: usize, k: usize| pb.source[k * nx + i];
    let sx = |i, k| s(i, k) - (hom_h(i, k + 1) - hom_h(i, k)) / area;
    let sy = |i, k| s(i, k) - (hom_v(i + 1, k) - hom_v(i, k)) / area;

    let flux_v = |i: usize, k: usize| {
        let ((st, pe), _, _, h) = vertical(i, k);
        let shift = if pe.abs() >= SMALL_PECLET_CUTOFF {
            0.5 * h * dy
        } else {
            0.0
        };
        let (sl, sr) = if i == 0 {
            (sx(0, k), sx(0, k))
        } else if i == nx {
            (sx(nx - 1, k), sx(nx - 1, k))
        } else {
            (sx(i - 1, k), sx(i, k))
        };
        let mid = hom_v(i, k) + dy * (st.b_left * sl + st.b_right * sr);
        if i == 0 {
            mid - shift * sl
        } else if i == nx {
            mid + shift * sr
        } else {
            mid
        }
    };
    let flux_h = |i: usize, k: usize| {
        let ((st, pe), _, _, h) = horizontal(i, k);
        let shift = if pe.abs() >= SMALL_PECLET_CUTOFF {
            0.5 * h * dx
        } else {
            0.0
        };
        let (sl, sr) = if k == 0 {
            (sy(i, 0), sy(i, 0))
        } else if k == ny {
            (sy(i, ny - 1), sy(i, ny - 1))
        } else {
            (sy(i, k - 1), sy(i, k))
        };
        let mid = hom_h(i, k) + dx * (st.b_left * sl + st.b_right * sr);
        if k == 0 {
            mid - shift * sl
        } else if k == ny {
            mid + shift * sr
        } else {
            mid
        }
    };

    let mut out = Vec::with_capacity(nx * ny);
    for k in 0..ny {
        for i in 0..nx {
            out.push(
                flux_v(i + 1, k) - flux_v(i, k) + flux_h(i, k + 1) - flux_h(i, k) - area * s(i, k),
            );
        }
    }
    out
}
