use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{function}: argument {value} is not finite")]
    Domain { function: &'static str, value: f64 },

    /// W̃ evaluated with a near-zero Péclet argument and a nonzero shift.
    #[error("w_tilde({z:e}, {q:e}): |z| below guard with nonzero shift")]
    SchemePolicy { z: f64, q: f64 },

    #[error("{what} is not finite")]
    NonFinite { what: &'static str },

    #[error("degenerate stencil: denominator {denominator:e} below guard")]
    DegenerateStencil { denominator: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("size mismatch: {what} has length {got}, expected {expected}")]
    SizeMismatch {
        what: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("zero pivot at row {row}")]
    ZeroPivot { row: usize },

    #[error("linear solve did not converge: relative residual {residual:e}")]
    Solver { residual: f64 },

    #[error("relative L2 error undefined: exact solution has zero norm")]
    UndefinedMetric,

    #[error("interface {index}: {source}")]
    AtInterface {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("edge {edge}: {source}")]
    AtEdge {
        edge: String,
        #[source]
        source: Box<Error>,
    },

    #[error("level N={n}: {source}")]
    AtLevel {
        n: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn at_interface(self, index: usize) -> Self {
        Error::AtInterface {
            index,
            source: Box::new(self),
        }
    }

    pub fn at_level(self, n: usize) -> Self {
        Error::AtLevel {
            n,
            source: Box::new(self),
        }
    }

    /// True for configuration problems, as opposed to numerical failures.
    pub fn is_config(&self) -> bool {
        match self {
            Error::Config(_) => true,
            Error::AtLevel { source, .. }
            | Error::AtInterface { source, .. }
            | Error::AtEdge { source, .. } => source.is_config(),
            _ => false,
        }
    }
}
