//! Error metric, convergence studies and CSV output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::cases::CaseDefinition;
use crate::error::{Error, Result};
use crate::flux1d::{FluxVariant, Limiter};
use crate::mesh::{build_mesh_1d, build_mesh_2d};
use crate::poisson::{
    reconstruct_velocity_1d, reconstruct_velocity_2d, solve_poisson_1d, solve_poisson_2d,
};
use crate::solver1d::{solve_transport_1d, DiscreteSolution1D, SchemeParams};
use crate::transport2d::{solve_transport_2d, DiscreteSolution2D};

/// `sqrt(Σ w (e - c)²) / sqrt(Σ w e²)` for a uniform weight `w`.
pub fn l2_relative_error(numeric: &[f64], exact: &[f64]) -> Result<f64> {
    if numeric.len() != exact.len() {
        return Err(Error::SizeMismatch {
            what: "numeric solution",
            got: numeric.len(),
            expected: exact.len(),
        });
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for (c, e) in numeric.iter().zip(exact) {
        num += (e - c) * (e - c);
        den += e * e;
    }
    if den == 0.0 {
        return Err(Error::UndefinedMetric);
    }
    Ok((num / den).sqrt())
}

/// Relative L2 error over the control volumes of the interior nodes.
pub fn l2_relative_error_1d(sol: &DiscreteSolution1D, exact: impl Fn(f64) -> f64) -> Result<f64> {
    let range = sol.mesh.interior();
    let exact: Vec<f64> = range.clone().map(|j| exact(sol.mesh.node(j))).collect();
    l2_relative_error(&sol.values[range], &exact)
}

/// Relative L2 error over the cells.
pub fn l2_relative_error_2d(
    sol: &DiscreteSolution2D,
    exact: impl Fn(f64, f64) -> f64,
) -> Result<f64> {
    let exact = crate::cases::cell_samples(&sol.mesh, exact);
    l2_relative_error(&sol.values, &exact)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    OneD(DiscreteSolution1D),
    TwoD(DiscreteSolution2D),
}

/// Solution and error at one mesh level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelResult {
    pub n: usize,
    pub error: f64,
    pub solution: Solution,
}

/// Poisson solve, velocity reconstruction, transport solve and error for one
/// level; `n` cells per direction.
pub fn run_level(
    case: &CaseDefinition,
    variant: FluxVariant,
    limiter: Limiter,
    n: usize,
) -> Result<LevelResult> {
    let params = SchemeParams::new(variant, case.mu, case.diffusion).with_limiter(limiter);
    let run = || -> Result<LevelResult> {
        if case.dimension() == 1 {
            let mesh = build_mesh_1d(n, 1.0)?;
            let sp: Vec<f64> = mesh
                .nodes()
                .iter()
                .map(|&x| case.poisson_source_1d(x))
                .collect();
            let phi = solve_poisson_1d(&mesh, &sp, case.potential_bc_1d())?;
            let vel = reconstruct_velocity_1d(&phi, &sp)?;
            let source = case.source_1d(&phi);
            let sol = solve_transport_1d(
                &mesh,
                &vel,
                &source,
                case.concentration_bc_1d(&mesh),
                &params,
            )?;
            let error = l2_relative_error_1d(&sol, |x| case.exact_1d(x))?;
            Ok(LevelResult {
                n,
                error,
                solution: Solution::OneD(sol),
            })
        } else {
            let mesh = build_mesh_2d(n, n, 1.0, 1.0)?;
            let phi = solve_poisson_2d(
                &mesh,
                &case.poisson_sources_2d(&mesh),
                case.potential_bc_2d(&mesh),
            )?;
            let vel = reconstruct_velocity_2d(&phi)?;
            let sol = solve_transport_2d(
                &mesh,
                &vel,
                &case.source_2d(&mesh),
                &case.concentration_bc_2d(&mesh),
                &params,
            )?;
            let error = l2_relative_error_2d(&sol, |x, y| case.exact_2d(x, y))?;
            Ok(LevelResult {
                n,
                error,
                solution: Solution::TwoD(sol),
            })
        }
    };
    run().map_err(|e| e.at_level(n))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub error: f64,
    /// `log₂(E_{i-1}/E_i)`; absent on the first row.
    pub order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub case_id: u8,
    pub variant: FluxVariant,
    pub diffusion: f64,
    pub amp: Option<f64>,
    pub mu: f64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn from_errors(
        case: &CaseDefinition,
        variant: FluxVariant,
        levels: &[(usize, f64)],
    ) -> Self {
        let rows = levels
            .iter()
            .enumerate()
            .map(|(i, &(n, error))| ConvergenceRow {
                n,
                error,
                order: (i > 0).then(|| (levels[i - 1].1 / error).log2()),
            })
            .collect();
        Self {
            case_id: case.id(),
            variant,
            diffusion: case.diffusion,
            amp: case.amp(),
            mu: case.mu,
            rows,
        }
    }

    pub fn errors(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.error).collect()
    }

    /// Order between the last two levels.
    pub fn final_order(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.order)
    }

    /// Order at the row for level `n`.
    pub fn order_at(&self, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.n == n).and_then(|r| r.order)
    }
}

/// Levels must start at 2 or more and double each step.
pub fn check_levels(levels: &[usize]) -> Result<()> {
    if let Some(&first) = levels.first() {
        if first < 2 {
            return Err(Error::Config(format!("mesh level {first} is below 2")));
        }
    }
    for w in levels.windows(2) {
        if w[1] != 2 * w[0] {
            return Err(Error::Config(format!(
                "levels must double: {} is followed by {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Runs every level, concurrently, and collects the report in level order.
/// The first failing level aborts the study.
pub fn run_convergence(
    case: &CaseDefinition,
    variant: FluxVariant,
    levels: &[usize],
    limiter: Limiter,
) -> Result<ConvergenceReport> {
    check_levels(levels)?;
    let results: Vec<Result<f64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = levels
            .iter()
            .map(|&n| scope.spawn(move || run_level(case, variant, limiter, n).map(|r| r.error)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("level thread panicked"))
            .collect()
    });
    let mut errors = Vec::with_capacity(levels.len());
    for (&n, r) in levels.iter().zip(results) {
        errors.push((n, r?));
    }
    Ok(ConvergenceReport::from_errors(case, variant, &errors))
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_csv(report: &ConvergenceReport, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "N,l2_error,order")?;
    for row in &report.rows {
        match row.order {
            Some(order) => writeln!(out, "{},{:.6e},{:.6}", row.n, row.error, order)?,
            None => writeln!(out, "{},{:.6e},", row.n, row.error)?,
        }
    }
    Ok(())
}

pub fn emit_csv(report: &ConvergenceReport, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(io_error(path))?;
    let mut out = BufWriter::new(file);
    write_csv(report, &mut out)
        .and_then(|_| out.flush())
        .map_err(io_error(path))
}

/// `x,c_numeric,c_exact` at the nodes, or `x,y,c_numeric,c_exact` at the
/// cell centres.
pub fn write_dump(
    solution: &Solution,
    case: &CaseDefinition,
    out: &mut impl Write,
) -> std::io::Result<()> {
    match solution {
        Solution::OneD(sol) => {
            writeln!(out, "x,c_numeric,c_exact")?;
            for (j, c) in sol.values.iter().enumerate() {
                let x = sol.mesh.node(j);
                writeln!(out, "{:.9e},{:.9e},{:.9e}", x, c, case.exact_1d(x))?;
            }
        }
        Solution::TwoD(sol) => {
            writeln!(out, "x,y,c_numeric,c_exact")?;
            let m = &sol.mesh;
            for k in 0..m.ny() {
                for i in 0..m.nx() {
                    let (x, y) = m.center(i, k);
                    let c = sol.values[m.index(i, k)];
                    writeln!(
                        out,
                        "{:.9e},{:.9e},{:.9e},{:.9e}",
                        x,
                        y,
                        c,
                        case.exact_2d(x, y)
                    )?;
                }
            }
        }
    }
    Ok(())
}

pub fn emit_dump(solution: &Solution, case: &CaseDefinition, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(io_error(path))?;
    let mut out = BufWriter::new(file);
    write_dump(solution, case, &mut out)
        .and_then(|_| out.flush())
        .map_err(io_error(path))
}
