use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use poisson_dirac_cli::commands::{self, PointOptions};
use poisson_dirac_cli::report::{Failure, Report};
use poisson_dirac_cli::scenario::{self, parse_points};

/// Exact pointwise analysis of polynomial Poisson and Dirac structures.
///
/// Exit codes: 0 success, 1 input error, 2 mathematical precondition failed,
/// 3 property violated.
#[derive(Debug, Parser)]
#[command(name = "pdirac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Scenario file (JSON).
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,

    /// Sample points, e.g. "0,1/2;1,-3". Overrides --grid and the scenario's points.
    #[arg(long, global = true, allow_hyphen_values = true)]
    points: Option<String>,

    /// Generate sample points with coordinates p/q, |p| and q at most this bound.
    #[arg(long, global = true)]
    grid: Option<u32>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of generated grid points.
    #[arg(long, global = true, default_value_t = 25)]
    count: usize,

    /// Print only the machine-readable JSON report.
    #[arg(long, global = true)]
    porcelain: bool,

    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Rank profile of a submanifold at sample points.
    Classify,
    /// Symbolic Jacobi identity check.
    Jacobi,
    /// Push a bivector forward along a polynomial diffeomorphism.
    Pushforward,
    /// Cosymplectic extension of a linear subspace.
    Extend,
    /// Canonical Poisson isomorphism between two cosymplectic extensions.
    Phi,
    /// Coisotropic embedding of a Dirac manifold into E*.
    Embed,
    /// Bracket of basic functions on a submanifold, computed two ways.
    Bracket,
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let path = cli.scenario.as_ref().ok_or_else(|| Failure {
        exit_code: 1,
        message: "--scenario is required".into(),
    })?;
    let sc = scenario::load(path)?;
    let opts = PointOptions {
        explicit: cli.points.as_deref().map(parse_points).transpose()?,
        grid: cli.grid,
        seed: cli.seed,
        count: cli.count,
    };
    match cli.command {
        Command::Classify => commands::classify(&sc, &opts),
        Command::Jacobi => commands::jacobi(&sc),
        Command::Pushforward => commands::pushforward(&sc),
        Command::Extend => commands::extend(&sc),
        Command::Phi => commands::phi(&sc),
        Command::Embed => commands::embed(&sc, &opts),
        Command::Bracket => commands::bracket(&sc, &opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let doc = serde_json::to_string_pretty(&report.json).expect("reports serialize");
            if cli.porcelain {
                println!("{doc}");
            } else {
                println!("pdirac {}", env!("CARGO_PKG_VERSION"));
                print!("{}", report.text);
            }
            if let Some(out) = &cli.output {
                if let Err(e) = std::fs::write(out, format!("{doc}\n")) {
                    eprintln!("error: cannot write {}: {e}", out.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.exit_code as u8)
        }
    }
}
