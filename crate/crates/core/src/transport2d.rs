//! The 2D complete flux scheme on a Cartesian mesh.
//!
//! Each edge carries the 1D stencil of its normal direction, integrated over
//! the edge with the midpoint rule. The source seen by that stencil is the
//! total source: the cell source minus the transverse homogeneous flux
//! divergence (the cross flux). Cross fluxes stay implicit, so every cell
//! couples to its eight neighbours.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::flux1d::{peclet_data, select_stencil, FluxStencil, PecletData, SMALL_PECLET_CUTOFF};
use crate::linalg::BandedMatrix;
use crate::mesh::Mesh2D;
use crate::poisson::{sparse_relative_residual, BoundaryValues2D, InterfaceVelocityField2D};
use crate::solver1d::SchemeParams;

const RESIDUAL_TOL: f64 = 1e-10;

/// An edge of the mesh, with the index conventions of [`Mesh2D`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    /// Edge at `x = iΔx` in cell row `k`.
    Vertical { i: usize, k: usize },
    /// Edge at `y = kΔy` in cell column `i`.
    Horizontal { i: usize, k: usize },
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Vertical { i, k } => write!(f, "vertical ({i}, {k})"),
            Edge::Horizontal { i, k } => write!(f, "horizontal ({i}, {k})"),
        }
    }
}

impl Edge {
    pub fn is_boundary(&self, mesh: &Mesh2D) -> bool {
        match *self {
            Edge::Vertical { i, .. } => i == 0 || i == mesh.nx(),
            Edge::Horizontal { k, .. } => k == 0 || k == mesh.ny(),
        }
    }

    /// Distance between the two points the edge stencil connects.
    pub fn spacing(&self, mesh: &Mesh2D) -> f64 {
        let h = match self {
            Edge::Vertical { .. } => mesh.dx(),
            Edge::Horizontal { .. } => mesh.dy(),
        };
        if self.is_boundary(mesh) {
            0.5 * h
        } else {
            h
        }
    }

    /// Length of the edge.
    pub fn measure(&self, mesh: &Mesh2D) -> f64 {
        match self {
            Edge::Vertical { .. } => mesh.dy(),
            Edge::Horizontal { .. } => mesh.dx(),
        }
    }

    fn error(&self, e: Error) -> Error {
        Error::AtEdge {
            edge: self.to_string(),
            source: Box::new(e),
        }
    }
}

/// Integrated flux across an edge, positive towards `nbr`.
///
/// `own` is the west (vertical edges) or south (horizontal edges) side and
/// `nbr` the east or north side; on a boundary edge one of them is the
/// Dirichlet point at the edge midpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeFluxStencil {
    pub h_own: f64,
    pub h_nbr: f64,
    pub w_own: f64,
    pub w_nbr: f64,
}

impl EdgeFluxStencil {
    pub fn from_1d(s: &FluxStencil, measure: f64) -> Self {
        Self {
            h_own: s.a_left * measure,
            h_nbr: s.a_right * measure,
            w_own: s.b_left * measure,
            w_nbr: s.b_right * measure,
        }
    }

    pub fn homogeneous(&self, c_own: f64, c_nbr: f64) -> f64 {
        self.h_own * c_own + self.h_nbr * c_nbr
    }
}

/// Péclet data of an edge. Boundary edges use the half spacing and `α = 0`;
/// their velocity is the one reconstructed from the half-spacing difference.
pub fn edge_peclet_2d(
    vel: &InterfaceVelocityField2D,
    edge: Edge,
    params: &SchemeParams,
    mesh: &Mesh2D,
) -> PecletData {
    let (v, dv) = match edge {
        Edge::Vertical { i, k } => {
            let e = mesh.vertical_edge_index(i, k);
            (vel.v_vertical[e], vel.dvdx_vertical[e])
        }
        Edge::Horizontal { i, k } => {
            let e = mesh.horizontal_edge_index(i, k);
            (vel.v_horizontal[e], vel.dvdy_horizontal[e])
        }
    };
    let h = edge.spacing(mesh);
    let p = peclet_data(v, dv, h, params.mu, params.diffusion, params.limiter);
    if edge.is_boundary(mesh) {
        PecletData::new(p.pe, p.q, 0.0)
    } else {
        p
    }
}

pub fn integrated_flux_stencil(
    edge: Edge,
    p: &PecletData,
    params: &SchemeParams,
    mesh: &Mesh2D,
) -> Result<EdgeFluxStencil> {
    let h = edge.spacing(mesh);
    let measure = edge.measure(mesh);
    let s = select_stencil(params.variant, p, params.diffusion, h).map_err(|e| edge.error(e))?;
    let mut st = EdgeFluxStencil::from_1d(&s, measure);
    // The half-interval stencil gives the flux at the half-interval midpoint;
    // where advection dominates, Γ' = s̃ along the line moves it to the edge.
    if p.pe.abs() >= SMALL_PECLET_CUTOFF {
        match edge {
            Edge::Vertical { i: 0, .. } | Edge::Horizontal { k: 0, .. } => {
                st.w_own -= 0.5 * h * measure;
            }
            _ if edge.is_boundary(mesh) => st.w_nbr += 0.5 * h * measure,
            _ => {}
        }
    }
    Ok(st)
}

/// Stencils for every edge, indexed like the velocity arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeStencils2D {
    pub vertical: Vec<EdgeFluxStencil>,
    pub horizontal: Vec<EdgeFluxStencil>,
}

pub fn edge_stencils_2d(
    mesh: &Mesh2D,
    vel: &InterfaceVelocityField2D,
    params: &SchemeParams,
) -> Result<EdgeStencils2D> {
    params.check()?;
    check_len(
        "vertical velocity",
        vel.v_vertical.len(),
        mesh.n_vertical_edges(),
    )?;
    check_len(
        "vertical derivative",
        vel.dvdx_vertical.len(),
        mesh.n_vertical_edges(),
    )?;
    check_len(
        "horizontal velocity",
        vel.v_horizontal.len(),
        mesh.n_horizontal_edges(),
    )?;
    check_len(
        "horizontal derivative",
        vel.dvdy_horizontal.len(),
        mesh.n_horizontal_edges(),
    )?;
    let stencil = |edge: Edge| {
        let p = edge_peclet_2d(vel, edge, params, mesh);
        integrated_flux_stencil(edge, &p, params, mesh)
    };
    let mut vertical = Vec::with_capacity(mesh.n_vertical_edges());
    for k in 0..mesh.ny() {
        for i in 0..=mesh.nx() {
            vertical.push(stencil(Edge::Vertical { i, k })?);
        }
    }
    let mut horizontal = Vec::with_capacity(mesh.n_horizontal_edges());
    for k in 0..=mesh.ny() {
        for i in 0..mesh.nx() {
            horizontal.push(stencil(Edge::Horizontal { i, k })?);
        }
    }
    Ok(EdgeStencils2D {
        vertical,
        horizontal,
    })
}

fn check_len(what: &'static str, got: usize, expected: usize) -> Result<()> {
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

/// `constant + Σ coef·c[cell]`. Terms may repeat a cell.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinearForm {
    pub constant: f64,
    pub terms: Vec<(usize, f64)>,
}

impl LinearForm {
    pub fn constant(value: f64) -> Self {
        Self {
            constant: value,
            terms: Vec::new(),
        }
    }

    pub fn eval(&self, c: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|&(j, a)| a * c[j]).sum::<f64>()
    }

    pub fn add_scaled(&mut self, other: &LinearForm, factor: f64) {
        self.constant += factor * other.constant;
        self.terms
            .extend(other.terms.iter().map(|&(j, a)| (j, a * factor)));
    }

    /// Terms merged per cell, sorted by cell.
    pub fn merged(&self) -> BTreeMap<usize, f64> {
        let mut m = BTreeMap::new();
        for &(j, a) in &self.terms {
            *m.entry(j).or_insert(0.0) += a;
        }
        m
    }
}

/// Total sources of every cell as linear forms in the unknowns.
#[derive(Debug, Clone, PartialEq)]
pub struct TotalSource {
    /// Seen by the vertical-edge (x-direction) stencils.
    pub x: Vec<LinearForm>,
    /// Seen by the horizontal-edge (y-direction) stencils.
    pub y: Vec<LinearForm>,
}

/// Homogeneous edge flux as a linear form; boundary sides are constants.
fn homogeneous_form(
    mesh: &Mesh2D,
    stencils: &EdgeStencils2D,
    bc: &BoundaryValues2D,
    edge: Edge,
) -> LinearForm {
    let (st, own, nbr) = match edge {
        Edge::Vertical { i, k } => {
            let st = stencils.vertical[mesh.vertical_edge_index(i, k)];
            let own = if i == 0 {
                Err(bc.west[k])
            } else {
                Ok(mesh.index(i - 1, k))
            };
            let nbr = if i == mesh.nx() {
                Err(bc.east[k])
            } else {
                Ok(mesh.index(i, k))
            };
            (st, own, nbr)
        }
        Edge::Horizontal { i, k } => {
            let st = stencils.horizontal[mesh.horizontal_edge_index(i, k)];
            let own = if k == 0 {
                Err(bc.south[i])
            } else {
                Ok(mesh.index(i, k - 1))
            };
            let nbr = if k == mesh.ny() {
                Err(bc.north[i])
            } else {
                Ok(mesh.index(i, k))
            };
            (st, own, nbr)
        }
    };
    let mut form = LinearForm::default();
    for (side, coef) in [(own, st.h_own), (nbr, st.h_nbr)] {
        match side {
            Ok(cell) => form.terms.push((cell, coef)),
            Err(value) => form.constant += coef * value,
        }
    }
    form
}

/// `s̃ˣ = s - (F^h_N - F^h_S)/(ΔxΔy)` and `s̃ʸ = s - (F^h_E - F^h_W)/(ΔxΔy)`,
/// with `F^h` the integrated homogeneous fluxes on the transverse edges.
pub fn total_sources(
    mesh: &Mesh2D,
    sources: &[f64],
    stencils: &EdgeStencils2D,
    bc: &BoundaryValues2D,
) -> Result<TotalSource> {
    check_len("transport source", sources.len(), mesh.n_cells())?;
    let area = mesh.cell_area();
    let mut x = Vec::with_capacity(mesh.n_cells());
    let mut y = Vec::with_capacity(mesh.n_cells());
    for k in 0..mesh.ny() {
        for i in 0..mesh.nx() {
            let s = sources[mesh.index(i, k)];
            let mut sx = LinearForm::constant(s);
            sx.add_scaled(
                &homogeneous_form(mesh, stencils, bc, Edge::Horizontal { i, k: k + 1 }),
                -1.0 / area,
            );
            sx.add_scaled(
                &homogeneous_form(mesh, stencils, bc, Edge::Horizontal { i, k }),
                1.0 / area,
            );
            let mut sy = LinearForm::constant(s);
            sy.add_scaled(
                &homogeneous_form(mesh, stencils, bc, Edge::Vertical { i: i + 1, k }),
                -1.0 / area,
            );
            sy.add_scaled(
                &homogeneous_form(mesh, stencils, bc, Edge::Vertical { i, k }),
                1.0 / area,
            );
            x.push(sx);
            y.push(sy);
        }
    }
    Ok(TotalSource { x, y })
}

/// Full integrated flux of an edge as a linear form. On a boundary edge the
/// source over the half interval is the adjacent cell's total source.
fn edge_flux_form(
    mesh: &Mesh2D,
    stencils: &EdgeStencils2D,
    total: &TotalSource,
    bc: &BoundaryValues2D,
    edge: Edge,
) -> LinearForm {
    let mut form = homogeneous_form(mesh, stencils, bc, edge);
    let (st, own, nbr, forms) = match edge {
        Edge::Vertical { i, k } => {
            let own = mesh.index(i.saturating_sub(1), k);
            let nbr = mesh.index(i.min(mesh.nx() - 1), k);
            (
                stencils.vertical[mesh.vertical_edge_index(i, k)],
                own,
                nbr,
                &total.x,
            )
        }
        Edge::Horizontal { i, k } => {
            let own = mesh.index(i, k.saturating_sub(1));
            let nbr = mesh.index(i, k.min(mesh.ny() - 1));
            (
                stencils.horizontal[mesh.horizontal_edge_index(i, k)],
                own,
                nbr,
                &total.y,
            )
        }
    };
    form.add_scaled(&forms[own], st.w_own);
    form.add_scaled(&forms[nbr], st.w_nbr);
    form
}

/// Flux forms of all edges, vertical then horizontal.
fn all_edge_forms(
    mesh: &Mesh2D,
    stencils: &EdgeStencils2D,
    total: &TotalSource,
    bc: &BoundaryValues2D,
) -> (Vec<LinearForm>, Vec<LinearForm>) {
    let mut vertical = Vec::with_capacity(mesh.n_vertical_edges());
    for k in 0..mesh.ny() {
        for i in 0..=mesh.nx() {
            vertical.push(edge_flux_form(
                mesh,
                stencils,
                total,
                bc,
                Edge::Vertical { i, k },
            ));
        }
    }
    let mut horizontal = Vec::with_capacity(mesh.n_horizontal_edges());
    for k in 0..=mesh.ny() {
        for i in 0..mesh.nx() {
            horizontal.push(edge_flux_form(
                mesh,
                stencils,
                total,
                bc,
                Edge::Horizontal { i, k },
            ));
        }
    }
    (vertical, horizontal)
}

/// One row per cell, at most nine entries each, columns ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSystem2D {
    pub nx: usize,
    pub rows: Vec<Vec<(usize, f64)>>,
    pub rhs: Vec<f64>,
}

impl SparseSystem2D {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(c, a)| a * x[c]).sum())
            .collect()
    }

    pub fn relative_residual(&self, x: &[f64]) -> f64 {
        sparse_relative_residual(&self.rows, x, &self.rhs)
    }

    /// Dense copy, for inspection and tests.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut a = vec![vec![0.0; n]; n];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                a[r][c] += v;
            }
        }
        a
    }

    /// Banded LU with partial pivoting; bandwidth `nx + 1`.
    pub fn solve(&self) -> Result<Vec<f64>> {
        let n = self.n();
        let bw = self.nx + 1;
        let mut band = BandedMatrix::zeros(n, bw, bw);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                band.add(r, c, v);
            }
        }
        let x = band.solve(&self.rhs)?;
        let residual = self.relative_residual(&x);
        if residual.is_nan() || residual > RESIDUAL_TOL {
            return Err(Error::Solver { residual });
        }
        Ok(x)
    }
}

/// Everything the 2D scheme derives from the problem data before the solve.
#[derive(Debug, Clone)]
pub struct Discretization2D {
    pub mesh: Mesh2D,
    pub stencils: EdgeStencils2D,
    pub total: TotalSource,
    pub boundary: BoundaryValues2D,
    vertical_forms: Vec<LinearForm>,
    horizontal_forms: Vec<LinearForm>,
    sources: Vec<f64>,
}

impl Discretization2D {
    pub fn new(
        mesh: &Mesh2D,
        vel: &InterfaceVelocityField2D,
        sources: &[f64],
        bc: &BoundaryValues2D,
        params: &SchemeParams,
    ) -> Result<Self> {
        for (what, got, expected) in [
            ("west boundary", bc.west.len(), mesh.ny()),
            ("east boundary", bc.east.len(), mesh.ny()),
            ("south boundary", bc.south.len(), mesh.nx()),
            ("north boundary", bc.north.len(), mesh.nx()),
        ] {
            check_len(what, got, expected)?;
        }
        let stencils = edge_stencils_2d(mesh, vel, params)?;
        let total = total_sources(mesh, sources, &stencils, bc)?;
        let (vertical_forms, horizontal_forms) = all_edge_forms(mesh, &stencils, &total, bc);
        Ok(Self {
            mesh: mesh.clone(),
            stencils,
            total,
            boundary: bc.clone(),
            vertical_forms,
            horizontal_forms,
            sources: sources.to_vec(),
        })
    }

    /// Integrated flux form of `edge`.
    pub fn flux_form(&self, edge: Edge) -> &LinearForm {
        match edge {
            Edge::Vertical { i, k } => &self.vertical_forms[self.mesh.vertical_edge_index(i, k)],
            Edge::Horizontal { i, k } => {
                &self.horizontal_forms[self.mesh.horizontal_edge_index(i, k)]
            }
        }
    }

    /// Cell balance `F_E - F_W + F_N - F_S = ΔxΔy·s`.
    pub fn assemble(&self) -> SparseSystem2D {
        let m = &self.mesh;
        let area = m.cell_area();
        let mut rows = Vec::with_capacity(m.n_cells());
        let mut rhs = Vec::with_capacity(m.n_cells());
        for k in 0..m.ny() {
            for i in 0..m.nx() {
                let mut balance = LinearForm::default();
                balance.add_scaled(self.flux_form(Edge::Vertical { i: i + 1, k }), 1.0);
                balance.add_scaled(self.flux_form(Edge::Vertical { i, k }), -1.0);
                balance.add_scaled(self.flux_form(Edge::Horizontal { i, k: k + 1 }), 1.0);
                balance.add_scaled(self.flux_form(Edge::Horizontal { i, k }), -1.0);
                rows.push(balance.merged().into_iter().collect());
                rhs.push(area * self.sources[m.index(i, k)] - balance.constant);
            }
        }
        SparseSystem2D {
            nx: m.nx(),
            rows,
            rhs,
        }
    }

    /// Integrated edge fluxes of a cell solution: (vertical, horizontal).
    pub fn edge_fluxes(&self, c: &[f64]) -> (Vec<f64>, Vec<f64>) {
        (
            self.vertical_forms.iter().map(|f| f.eval(c)).collect(),
            self.horizontal_forms.iter().map(|f| f.eval(c)).collect(),
        )
    }
}

pub fn assemble_2d(
    mesh: &Mesh2D,
    vel: &InterfaceVelocityField2D,
    sources: &[f64],
    bc: &BoundaryValues2D,
    params: &SchemeParams,
) -> Result<SparseSystem2D> {
    Ok(Discretization2D::new(mesh, vel, sources, bc, params)?.assemble())
}

/// Cell values together with the Dirichlet data they were solved with.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSolution2D {
    pub mesh: Mesh2D,
    pub values: Vec<f64>,
    pub boundary: BoundaryValues2D,
}

pub fn solve_transport_2d(
    mesh: &Mesh2D,
    vel: &InterfaceVelocityField2D,
    sources: &[f64],
    bc: &BoundaryValues2D,
    params: &SchemeParams,
) -> Result<DiscreteSolution2D> {
    let values = assemble_2d(mesh, vel, sources, bc, params)?.solve()?;
    Ok(DiscreteSolution2D {
        mesh: mesh.clone(),
        values,
        boundary: bc.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flux1d::{stencil_pwc, FluxVariant};
    use crate::mesh::build_mesh_2d;

    fn params(variant: FluxVariant, d: f64) -> SchemeParams {
        SchemeParams::new(variant, 1.0, d)
    }

    #[test]
    fn uniform_field_peclet() {
        let mesh = build_mesh_2d(16, 16, 1.0, 1.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, -9.0, -9.0);
        let p = edge_peclet_2d(
            &vel,
            Edge::Vertical { i: 5, k: 3 },
            &params(FluxVariant::PiecewiseConstant, 0.5),
            &mesh,
        );
        assert!((p.pe + 9.0 / 16.0 / 0.5).abs() < 1e-15);
        assert_eq!(p.q, 0.0);
        let vel = InterfaceVelocityField2D::constant(&mesh, 0.0, 0.0);
        let p = edge_peclet_2d(
            &vel,
            Edge::Horizontal { i: 2, k: 9 },
            &params(FluxVariant::UpwindAdjusted, 1.0),
            &mesh,
        );
        assert_eq!((p.pe, p.q), (0.0, 0.0));
    }

    #[test]
    fn pure_diffusion_edge_weights() {
        let mesh = build_mesh_2d(4, 5, 1.0, 1.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, 0.0, 0.0);
        let st = edge_stencils_2d(&mesh, &vel, &params(FluxVariant::AutoUpwind, 1.0)).unwrap();
        let e = st.vertical[mesh.vertical_edge_index(2, 1)];
        let (dx, dy) = (mesh.dx(), mesh.dy());
        assert!((e.h_own - dy / dx).abs() < 1e-13 && (e.h_nbr + dy / dx).abs() < 1e-13);
        assert!((e.w_own - dx * dy / 8.0).abs() < 1e-15);
        assert!((e.w_nbr + dx * dy / 8.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_edge_uses_half_interval() {
        let mesh = build_mesh_2d(8, 4, 1.0, 2.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, 3.0, -2.0);
        let h = 0.5 * mesh.dx();
        for (d, shift) in [(0.01, 0.5 * h * mesh.dy()), (0.1, 0.0)] {
            let prm = params(FluxVariant::UpwindAdjusted, d);
            let edge = Edge::Vertical { i: 0, k: 2 };
            let p = edge_peclet_2d(&vel, edge, &prm, &mesh);
            assert_eq!(p.alpha, 0.0);
            let got = integrated_flux_stencil(edge, &p, &prm, &mesh).unwrap();
            let oracle = stencil_pwc(&PecletData::constant(3.0 * h / d), d, h).unwrap();
            let mut expected = EdgeFluxStencil::from_1d(&oracle, mesh.dy());
            expected.w_own -= shift;
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn uniform_solution_has_raw_total_source() {
        let mesh = build_mesh_2d(3, 4, 1.0, 1.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, 0.0, 0.0);
        let st =
            edge_stencils_2d(&mesh, &vel, &params(FluxVariant::PiecewiseConstant, 1.0)).unwrap();
        let bc = BoundaryValues2D::sample(&mesh, |_, _| 2.5);
        let s: Vec<f64> = (0..12).map(|j| j as f64 - 4.0).collect();
        let total = total_sources(&mesh, &s, &st, &bc).unwrap();
        let c = vec![2.5; 12];
        for (j, sj) in s.iter().enumerate() {
            assert!((total.x[j].eval(&c) - sj).abs() < 1e-12);
            assert!((total.y[j].eval(&c) - sj).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_data_gives_zero_solution() {
        let mesh = build_mesh_2d(5, 4, 1.0, 1.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, -9.0, -4.0);
        let sol = solve_transport_2d(
            &mesh,
            &vel,
            &[0.0; 20],
            &BoundaryValues2D::zeros(&mesh),
            &params(FluxVariant::UpwindAdjusted, 1e-3),
        )
        .unwrap();
        assert!(sol.values.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn rows_have_at_most_nine_entries() {
        let mesh = build_mesh_2d(5, 6, 1.0, 1.0).unwrap();
        let vel = InterfaceVelocityField2D::constant(&mesh, 1.0, 2.0);
        let sys = assemble_2d(
            &mesh,
            &vel,
            &[1.0; 30],
            &BoundaryValues2D::zeros(&mesh),
            &params(FluxVariant::PiecewiseConstant, 0.1),
        )
        .unwrap();
        assert_eq!(sys.n(), 30);
        assert!(sys.rows.iter().all(|r| r.len() <= 9));
        assert_eq!(sys.rows[mesh.index(2, 3)].len(), 9);
    }
}
