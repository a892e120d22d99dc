//! Uniform 1D partitions and uniform 2D Cartesian meshes.

use crate::error::{Error, Result};

/// Uniform partition `0 = x_0 < x_1 < ... < x_N = L` of `(0, L)`.
///
/// Unknowns of the finite-volume schemes live at the interior nodes
/// `1..N`; node `j` owns the control volume `(x_{j-1/2}, x_{j+1/2})`.
/// Interface `i` sits between nodes `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh1D {
    n_cells: usize,
    length: f64,
    dx: f64,
}

impl Mesh1D {
    pub fn new(n_cells: usize, length: f64) -> Result<Self> {
        if n_cells < 2 {
            return Err(Error::Config(format!(
                "need at least 2 cells, got {n_cells}"
            )));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::Config(format!(
                "length must be positive, got {length}"
            )));
        }
        Ok(Self {
            n_cells,
            length,
            dx: length / n_cells as f64,
        })
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn n_nodes(&self) -> usize {
        self.n_cells + 1
    }

    pub fn n_interfaces(&self) -> usize {
        self.n_cells
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn node(&self, j: usize) -> f64 {
        if j == self.n_cells {
            self.length
        } else {
            j as f64 * self.dx
        }
    }

    pub fn interface(&self, i: usize) -> f64 {
        0.5 * (self.node(i) + self.node(i + 1))
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_nodes()).map(|j| self.node(j)).collect()
    }

    pub fn interfaces(&self) -> Vec<f64> {
        (0..self.n_interfaces())
            .map(|i| self.interface(i))
            .collect()
    }

    /// Indices of the nodes carrying unknowns.
    pub fn interior(&self) -> std::ops::Range<usize> {
        1..self.n_cells
    }
}

/// Builds a [`Mesh1D`] with `n_cells` equal cells on `(0, length)`.
pub fn build_mesh_1d(n_cells: usize, length: f64) -> Result<Mesh1D> {
    Mesh1D::new(n_cells, length)
}

/// Uniform `nx × ny` cell-centred mesh of `(0, lx) × (0, ly)`.
///
/// Cell `(i, k)` (0-based) has centre `((i + 1/2)Δx, (k + 1/2)Δy)` and
/// linear index `i + nx·k`. Vertical edges are indexed `(i, k)` with
/// `i ∈ 0..=nx` at `x = iΔx`; horizontal edges `(i, k)` with `k ∈ 0..=ny`
/// at `y = kΔy`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh2D {
    nx: usize,
    ny: usize,
    lx: f64,
    ly: f64,
    dx: f64,
    dy: f64,
}

impl Mesh2D {
    pub fn new(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::Config(format!(
                "need at least 2 cells per direction, got {nx}x{ny}"
            )));
        }
        for (name, l) in [("lx", lx), ("ly", ly)] {
            if !(l > 0.0 && l.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {l}")));
            }
        }
        Ok(Self {
            nx,
            ny,
            lx,
            ly,
            dx: lx / nx as f64,
            dy: ly / ny as f64,
        })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn lx(&self) -> f64 {
        self.lx
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dy(&self) -> f64 {
        self.dy
    }

    pub fn n_cells(&self) -> usize {
        self.nx * self.ny
    }

    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }

    pub fn index(&self, i: usize, k: usize) -> usize {
        i + self.nx * k
    }

    pub fn center_x(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.dx
    }

    pub fn center_y(&self, k: usize) -> f64 {
        (k as f64 + 0.5) * self.dy
    }

    pub fn center(&self, i: usize, k: usize) -> (f64, f64) {
        (self.center_x(i), self.center_y(k))
    }

    /// Midpoint of vertical edge `(i, k)`, `i ∈ 0..=nx`.
    pub fn vertical_edge_midpoint(&self, i: usize, k: usize) -> (f64, f64) {
        (i as f64 * self.dx, self.center_y(k))
    }

    /// Midpoint of horizontal edge `(i, k)`, `k ∈ 0..=ny`.
    pub fn horizontal_edge_midpoint(&self, i: usize, k: usize) -> (f64, f64) {
        (self.center_x(i), k as f64 * self.dy)
    }

    pub fn n_vertical_edges(&self) -> usize {
        (self.nx + 1) * self.ny
    }

    pub fn n_horizontal_edges(&self) -> usize {
        self.nx * (self.ny + 1)
    }

    pub fn vertical_edge_index(&self, i: usize, k: usize) -> usize {
        i + (self.nx + 1) * k
    }

    pub fn horizontal_edge_index(&self, i: usize, k: usize) -> usize {
        i + self.nx * k
    }
}

pub fn build_mesh_2d(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Mesh2D> {
    Mesh2D::new(nx, ny, lx, ly)
}
