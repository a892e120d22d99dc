use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use fluxcf::cases::{case_by_id, CaseDefinition};
use fluxcf::harness::{emit_csv, emit_dump, run_convergence, run_level, write_csv};
use fluxcf::{Error, FluxVariant, Limiter};

#[derive(Parser)]
#[command(
    name = "fluxcf",
    version,
    about = "Complete flux scheme solver and convergence harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimiterArg {
    Off,
    Ratio,
    Cutoff,
}

impl From<LimiterArg> for Limiter {
    fn from(l: LimiterArg) -> Self {
        match l {
            LimiterArg::Off => Limiter::Off,
            LimiterArg::Ratio => Limiter::Ratio,
            LimiterArg::Cutoff => Limiter::RatioWithCutoff,
        }
    }
}

#[derive(clap::Args)]
struct CaseArgs {
    /// Test case: 1 and 2 are 1D, 3 is 2D.
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    #[arg(long)]
    diffusion: f64,
    /// Poisson source amplitude (case 2 only, default 10).
    #[arg(long)]
    amp: Option<f64>,
    /// pwc, upwind, downwind or auto.
    #[arg(long, value_parser = parse_variant)]
    flux: FluxVariant,
    #[arg(long, value_enum, default_value = "cutoff")]
    limiter: LimiterArg,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem and report its relative L2 error.
    Solve {
        #[command(flatten)]
        args: CaseArgs,
        /// Cells per direction.
        #[arg(long)]
        n: usize,
        /// Write the solution as CSV.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run a refinement study and write `N,l2_error,order` CSV.
    Converge {
        #[command(flatten)]
        args: CaseArgs,
        /// Comma-separated doubling levels; defaults depend on the case.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<usize>>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_variant(s: &str) -> Result<FluxVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn build_case(args: &CaseArgs) -> fluxcf::Result<CaseDefinition> {
    case_by_id(args.case, args.diffusion, args.amp)
}

fn run(cli: Cli) -> fluxcf::Result<()> {
    match cli.command {
        Command::Solve { args, n, dump } => {
            let case = build_case(&args)?;
            let start = Instant::now();
            let level = run_level(&case, args.flux, args.limiter.into(), n)?;
            eprintln!(
                "case {} flux {} D {:e} N {} in {:.3} s",
                case.id(),
                args.flux,
                case.diffusion,
                n,
                start.elapsed().as_secs_f64()
            );
            println!("N={} l2_error={:.6e}", n, level.error);
            if let Some(path) = dump {
                emit_dump(&level.solution, &case, &path)?;
            }
            Ok(())
        }
        Command::Converge { args, levels, out } => {
            let case = build_case(&args)?;
            let levels = levels.unwrap_or_else(|| case.default_levels());
            let start = Instant::now();
            let report = run_convergence(&case, args.flux, &levels, args.limiter.into())?;
            eprintln!(
                "case {} flux {} D {:e} levels {:?} in {:.3} s",
                case.id(),
                args.flux,
                case.diffusion,
                levels,
                start.elapsed().as_secs_f64()
            );
            match out {
                Some(path) => emit_csv(&report, &path),
                None => {
                    write_csv(&report, &mut std::io::stdout().lock()).map_err(|source| Error::Io {
                        path: PathBuf::from("<stdout>"),
                        source,
                    })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() || matches!(e, Error::Io { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
