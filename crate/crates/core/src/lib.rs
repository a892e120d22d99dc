//! Complete flux finite-volume schemes for steady advection–diffusion
//! coupled to a Poisson equation for the velocity, in 1D and 2D.
//!
//! The usual pipeline: solve the Poisson problem with [`poisson`], rebuild
//! interface velocities and their derivatives, then assemble and solve the
//! transport balance with [`solver1d`] or [`transport2d`]. [`harness`] runs
//! this on the manufactured problems of [`cases`] and measures convergence.

pub mod cases;
pub mod error;
pub mod flux1d;
pub mod harness;
pub mod linalg;
pub mod mesh;
pub mod poisson;
pub mod solver1d;
pub mod specfun;
pub mod transport2d;

pub use error::{Error, Result};
pub use flux1d::{FluxStencil, FluxVariant, Limiter, PecletData};
pub use harness::{run_convergence, ConvergenceReport};
pub use mesh::{Mesh1D, Mesh2D};
pub use solver1d::SchemeParams;
