//! Manufactured-solution test problems.
//!
//! Case 1 is a 1D boundary-layer problem with an analytic velocity, case 2 a
//! 1D problem whose velocity only exists through a discrete potential with
//! sharply peaked Poisson sources, and case 3 a 2D problem on the unit square.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::mesh::{Mesh1D, Mesh2D};
use crate::poisson::{BoundaryValues2D, PotentialField1D};

/// Peak amplitude of the case-2 Poisson source when none is given.
pub const DEFAULT_AMP: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CaseKind {
    One,
    Two { amp: f64 },
    Three,
}

/// How the transport source is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourcePolicy {
    /// From the analytic velocity.
    Analytic,
    /// From the velocity of the discrete potential.
    DiscreteVelocity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseDefinition {
    pub kind: CaseKind,
    pub diffusion: f64,
    pub mu: f64,
}

fn check_diffusion(diffusion: f64) -> Result<()> {
    if diffusion > 0.0 && diffusion.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "diffusion must be positive, got {diffusion}"
        )))
    }
}

/// `V = 1 - 0.95 sin(πx)`, `c* = 0.2 sin(πx) + boundary layer at x = 1`.
pub fn case1(diffusion: f64) -> Result<CaseDefinition> {
    check_diffusion(diffusion)?;
    Ok(CaseDefinition {
        kind: CaseKind::One,
        diffusion,
        mu: 1.0,
    })
}

/// `c* = sin(πx)`, `s_P = -A(e^{-1000x²} - e^{-1000(1-x)²})`,
/// `φ(0) = -300`, `φ(1) = 0`.
pub fn case2(amp: f64, diffusion: f64) -> Result<CaseDefinition> {
    check_diffusion(diffusion)?;
    if !amp.is_finite() {
        return Err(Error::Config(format!(
            "amplitude must be finite, got {amp}"
        )));
    }
    Ok(CaseDefinition {
        kind: CaseKind::Two { amp },
        diffusion,
        mu: 1.0,
    })
}

/// `c* = sin(πx)sin(πy)`,
/// `φ = sin(πx)sin(πy) + sin(2πx)sin(2πy) + 9x + 9y`.
pub fn case3(diffusion: f64) -> Result<CaseDefinition> {
    check_diffusion(diffusion)?;
    Ok(CaseDefinition {
        kind: CaseKind::Three,
        diffusion,
        mu: 1.0,
    })
}

/// Builds a case from its number, as on the command line.
pub fn case_by_id(id: u8, diffusion: f64, amp: Option<f64>) -> Result<CaseDefinition> {
    if amp.is_some() && id != 2 {
        return Err(Error::Config(format!(
            "an amplitude only applies to case 2, not case {id}"
        )));
    }
    match id {
        1 => case1(diffusion),
        2 => case2(amp.unwrap_or(DEFAULT_AMP), diffusion),
        3 => case3(diffusion),
        _ => Err(Error::Config(format!(
            "unknown case {id} (expected 1, 2 or 3)"
        ))),
    }
}

impl CaseDefinition {
    pub fn id(&self) -> u8 {
        match self.kind {
            CaseKind::One => 1,
            CaseKind::Two { .. } => 2,
            CaseKind::Three => 3,
        }
    }

    pub fn dimension(&self) -> usize {
        match self.kind {
            CaseKind::Three => 2,
            _ => 1,
        }
    }

    pub fn amp(&self) -> Option<f64> {
        match self.kind {
            CaseKind::Two { amp } => Some(amp),
            _ => None,
        }
    }

    pub fn source_policy(&self) -> SourcePolicy {
        match self.kind {
            CaseKind::Two { .. } => SourcePolicy::DiscreteVelocity,
            _ => SourcePolicy::Analytic,
        }
    }

    /// Default mesh levels for convergence studies.
    pub fn default_levels(&self) -> Vec<usize> {
        match self.dimension() {
            1 => vec![40, 80, 160, 320, 640, 1280],
            _ => vec![16, 32, 64, 128, 256],
        }
    }

    fn require_dim(&self, dim: usize) {
        assert_eq!(
            self.dimension(),
            dim,
            "case {} is {}-dimensional",
            self.id(),
            self.dimension()
        );
    }

    // Boundary-layer part of case 1: (e^{(x-1)/D} - e^{-1/D})/(1 - e^{-1/D}),
    // returned as (value, e^{(x-1)/D}/(1 - e^{-1/D})).
    fn layer(&self, x: f64) -> (f64, f64) {
        let d = self.diffusion;
        let den = -(-1.0 / d).exp_m1();
        let e = ((x - 1.0) / d).exp();
        ((e - (-1.0 / d).exp()) / den, e / den)
    }

    /// `c*(x)` for the 1D cases.
    pub fn exact_1d(&self, x: f64) -> f64 {
        self.require_dim(1);
        match self.kind {
            CaseKind::One => 0.2 * (PI * x).sin() + self.layer(x).0,
            _ => (PI * x).sin(),
        }
    }

    /// `c*'(x)`.
    pub fn exact_1d_dx(&self, x: f64) -> f64 {
        self.require_dim(1);
        match self.kind {
            CaseKind::One => 0.2 * PI * (PI * x).cos() + self.layer(x).1 / self.diffusion,
            _ => PI * (PI * x).cos(),
        }
    }

    /// `c*''(x)`.
    pub fn exact_1d_dxx(&self, x: f64) -> f64 {
        self.require_dim(1);
        let d = self.diffusion;
        match self.kind {
            CaseKind::One => -0.2 * PI * PI * (PI * x).sin() + self.layer(x).1 / (d * d),
            _ => -PI * PI * (PI * x).sin(),
        }
    }

    /// `c*(x, y)` for case 3.
    pub fn exact_2d(&self, x: f64, y: f64) -> f64 {
        self.require_dim(2);
        (PI * x).sin() * (PI * y).sin()
    }

    /// Poisson source `s_P = -φ''` (1D).
    pub fn poisson_source_1d(&self, x: f64) -> f64 {
        self.require_dim(1);
        match self.kind {
            CaseKind::One => -0.95 * PI * (PI * x).cos(),
            CaseKind::Two { amp } => {
                -amp * ((-1000.0 * x * x).exp() - (-1000.0 * (1.0 - x) * (1.0 - x)).exp())
            }
            CaseKind::Three => unreachable!(),
        }
    }

    /// Dirichlet data `(φ(0), φ(1))`. For case 1 from `φ = -x - 0.95cos(πx)/π`.
    pub fn potential_bc_1d(&self) -> (f64, f64) {
        self.require_dim(1);
        match self.kind {
            CaseKind::One => (-0.95 / PI, -1.0 + 0.95 / PI),
            _ => (-300.0, 0.0),
        }
    }

    /// Analytic velocity where one exists.
    pub fn velocity_1d(&self, x: f64) -> Option<f64> {
        self.require_dim(1);
        match self.kind {
            CaseKind::One => Some(1.0 - 0.95 * (PI * x).sin()),
            _ => None,
        }
    }

    pub fn concentration_bc_1d(&self, mesh: &Mesh1D) -> (f64, f64) {
        (self.exact_1d(0.0), self.exact_1d(mesh.length()))
    }

    /// Transport source at every node. Case 2 uses the velocity of `phi`:
    /// central differences inside, one-sided second-order at the ends.
    pub fn source_1d(&self, phi: &PotentialField1D) -> Vec<f64> {
        self.require_dim(1);
        let mesh = &phi.mesh;
        let (mu, d) = (self.mu, self.diffusion);
        match self.kind {
            CaseKind::One => mesh
                .nodes()
                .iter()
                .map(|&x| {
                    let v = 1.0 - 0.95 * (PI * x).sin();
                    let vx = -0.95 * PI * (PI * x).cos();
                    let (layer, e) = self.layer(x);
                    let smooth = 0.2 * (PI * x).sin();
                    let smooth_dx = 0.2 * PI * (PI * x).cos();
                    let smooth_dxx = -0.2 * PI * PI * (PI * x).sin();
                    // μ(Vc)' - Dc'' with the layer terms combined: μVg' - Dg'' = (μV - 1)e/D.
                    mu * (vx * (smooth + layer) + v * smooth_dx) - d * smooth_dxx
                        + (mu * v - 1.0) * e / d
                })
                .collect(),
            _ => {
                let p = &phi.values;
                let n = mesh.n_cells();
                let h = mesh.dx();
                (0..=n)
                    .map(|j| {
                        let x = mesh.node(j);
                        let v = if j == 0 {
                            -(-3.0 * p[0] + 4.0 * p[1] - p[2]) / (2.0 * h)
                        } else if j == n {
                            -(3.0 * p[n] - 4.0 * p[n - 1] + p[n - 2]) / (2.0 * h)
                        } else {
                            -(p[j + 1] - p[j - 1]) / (2.0 * h)
                        };
                        mu * (self.exact_1d_dx(x) * v
                            + self.exact_1d(x) * self.poisson_source_1d(x))
                            - d * self.exact_1d_dxx(x)
                    })
                    .collect()
            }
        }
    }

    /// `φ` of case 3, used for its boundary data.
    pub fn potential_2d(&self, x: f64, y: f64) -> f64 {
        self.require_dim(2);
        (PI * x).sin() * (PI * y).sin()
            + (2.0 * PI * x).sin() * (2.0 * PI * y).sin()
            + 9.0 * x
            + 9.0 * y
    }

    /// `s_P = -Δφ`.
    pub fn poisson_source_2d(&self, x: f64, y: f64) -> f64 {
        self.require_dim(2);
        2.0 * PI * PI * (PI * x).sin() * (PI * y).sin()
            + 8.0 * PI * PI * (2.0 * PI * x).sin() * (2.0 * PI * y).sin()
    }

    /// `V = -∇φ`.
    pub fn velocity_2d(&self, x: f64, y: f64) -> (f64, f64) {
        self.require_dim(2);
        let (sx, cx) = (PI * x).sin_cos();
        let (sy, cy) = (PI * y).sin_cos();
        let (s2x, c2x) = (2.0 * PI * x).sin_cos();
        let (s2y, c2y) = (2.0 * PI * y).sin_cos();
        (
            -(PI * cx * sy + 2.0 * PI * c2x * s2y + 9.0),
            -(PI * sx * cy + 2.0 * PI * s2x * c2y + 9.0),
        )
    }

    /// `μ∇·(Vc*) - DΔc*` with `∇·V = s_P`.
    pub fn source_2d_at(&self, x: f64, y: f64) -> f64 {
        let (sx, cx) = (PI * x).sin_cos();
        let (sy, cy) = (PI * y).sin_cos();
        let c = sx * sy;
        let (v1, v2) = self.velocity_2d(x, y);
        self.mu * (self.poisson_source_2d(x, y) * c + v1 * PI * cx * sy + v2 * PI * sx * cy)
            + self.diffusion * 2.0 * PI * PI * c
    }

    pub fn source_2d(&self, mesh: &Mesh2D) -> Vec<f64> {
        cell_samples(mesh, |x, y| self.source_2d_at(x, y))
    }

    pub fn poisson_sources_2d(&self, mesh: &Mesh2D) -> Vec<f64> {
        cell_samples(mesh, |x, y| self.poisson_source_2d(x, y))
    }

    pub fn potential_bc_2d(&self, mesh: &Mesh2D) -> BoundaryValues2D {
        BoundaryValues2D::sample(mesh, |x, y| self.potential_2d(x, y))
    }

    pub fn concentration_bc_2d(&self, mesh: &Mesh2D) -> BoundaryValues2D {
        BoundaryValues2D::sample(mesh, |x, y| self.exact_2d(x, y))
    }
}

/// Values of `f` at the cell centres, in cell order.
pub fn cell_samples(mesh: &Mesh2D, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(mesh.n_cells());
    for k in 0..mesh.ny() {
        for i in 0..mesh.nx() {
            let (x, y) = mesh.center(i, k);
            out.push(f(x, y));
        }
    }
    out
}
