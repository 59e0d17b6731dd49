mod output;
mod pgm;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use golden_poincare::error::Error;
use golden_poincare::series::{EvalConfig, Evaluator};
use golden_poincare::verify::{run_suite, Suite};
use golden_poincare::zeros::{approx_zero_cloud, enumerate_simple_zeros, DEFAULT_BUDGET};
use log::info;
use num_complex::Complex64;

use output::{
    CloudRow, CoeffRow, ConfigEcho, EvalRow, Format, OutputRecord, VerifyRow, ZeroRow,
};

#[derive(Parser, Debug)]
#[command(name = "golden", version, about = "Evaluate f(2φz) = f(z)² − 1, its inverse g and its zeros")]
struct Cli {
    /// Zero enumeration depth L (position of the last −1).
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Taylor coefficients kept for the series part (N).
    #[arg(long, global = true, default_value_t = EvalConfig::default().series_cutoff)]
    series_cutoff: usize,
    /// Factors taken in infinite products (D).
    #[arg(long, global = true, default_value_t = EvalConfig::default().product_depth)]
    product_depth: usize,
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = EvalConfig::default().precision)]
    precision: u32,
    #[arg(long, global = true, default_value_t = EvalConfig::default().tolerance)]
    tolerance: f64,
    /// Node budget for the zero cloud.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Taylor coefficients c_0..c_N, exact and rounded.
    Coeffs { n: usize },
    /// Evaluate f, f', g or g' at a complex point written "a+bi".
    Eval {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(value_enum, default_value_t = Which::F)]
        which: Which,
    },
    /// Simple zeros whose last −1 sits at position ≤ L.
    Zeros { l: Option<usize> },
    /// Approximate zeros in ring n − n1 from primitive zeros of P_n.
    Cloud {
        n: usize,
        n1: usize,
        /// Also write a P5 hit-count raster here.
        #[arg(long)]
        pgm: Option<PathBuf>,
        /// Raster side length in pixels.
        #[arg(long, default_value_t = 512)]
        grid: usize,
    },
    /// Run a named invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, serde::Serialize)]
enum Which {
    #[value(name = "f")]
    F,
    #[value(name = "f'", alias = "fprime")]
    FPrime,
    #[value(name = "g")]
    G,
    #[value(name = "g'", alias = "gprime")]
    GPrime,
}

impl Which {
    fn label(self) -> &'static str {
        match self {
            Which::F => "f",
            Which::FPrime => "f'",
            Which::G => "g",
            Which::GPrime => "g'",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Poincare,
    Inverse,
    Representations,
    Moments,
    Multiplicity,
    Order,
    Paris,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Poincare => Suite::Poincare,
            SuiteArg::Inverse => Suite::Inverse,
            SuiteArg::Representations => Suite::Representations,
            SuiteArg::Moments => Suite::Moments,
            SuiteArg::Multiplicity => Suite::Multiplicity,
            SuiteArg::Order => Suite::Order,
            SuiteArg::Paris => Suite::Paris,
        }
    }
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o: {e}"))
    }
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse::<Complex64>()
        .map_err(|_| Failure::Usage(format!("cannot parse {s:?} as a complex number a+bi")))
}

fn config(cli: &Cli) -> Result<EvalConfig, Failure> {
    let cfg = EvalConfig {
        series_cutoff: cli.series_cutoff,
        product_depth: cli.product_depth,
        precision: cli.precision,
        tolerance: cli.tolerance,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = config(cli)?;
    let echo = ConfigEcho::new(&cfg, cli.depth, cli.budget, cli.format);
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let needs_tabular = !matches!(cli.command, Command::Cloud { .. });
    if needs_tabular && cli.format == Format::Pgm {
        return Err(Failure::Usage("--format pgm is only available for cloud".into()));
    }
    match &cli.command {
        Command::Coeffs { n } => {
            let ev = Evaluator::new(EvalConfig {
                series_cutoff: cfg.series_cutoff.max(*n),
                ..cfg
            })?;
            let rows: Vec<CoeffRow> = ev.table().coeffs()[..=*n].iter().enumerate().map(CoeffRow::new).collect();
            OutputRecord::new(argv, echo, rows).write(out, cli.format)?;
        }
        Command::Eval { z, which } => {
            let z = parse_complex(z)?;
            let ev = Evaluator::new(cfg)?;
            let est = match which {
                Which::F => ev.eval_f(z),
                Which::FPrime => ev.eval_f_prime(z),
                Which::G => ev.eval_g(z)?,
                Which::GPrime => ev.eval_g_prime(z)?,
            };
            let rows = vec![EvalRow::new(which.label(), z, est)];
            OutputRecord::new(argv, echo, rows).write(out, cli.format)?;
        }
        Command::Zeros { l } => {
            let depth = l
                .or(cli.depth)
                .ok_or_else(|| Failure::Usage("zeros needs L (positional or --depth)".into()))?;
            let ev = Evaluator::new(cfg)?;
            let records = enumerate_simple_zeros(&ev, depth)?;
            info!("{} zeros with last −1 at position ≤ {depth}", records.len());
            let rows: Vec<ZeroRow> = records.iter().map(ZeroRow::from).collect();
            OutputRecord::new(argv, echo, rows).write(out, cli.format)?;
        }
        Command::Cloud { n, n1, pgm, grid } => {
            let points = approx_zero_cloud(*n, *n1, cli.budget)?;
            info!("{} points in ring {}", points.len(), *n as i64 - *n1 as i64);
            let ring = (*n - *n1) as i32;
            if let Some(path) = pgm {
                let raster = pgm::histogram(&points, ring, *grid)?;
                std::fs::write(path, raster)?;
            }
            if cli.format == Format::Pgm {
                out.write_all(&pgm::histogram(&points, ring, *grid)?)?;
            } else {
                let rows: Vec<CloudRow> = points.iter().map(|p| CloudRow::new(p, *n)).collect();
                OutputRecord::new(argv, echo, rows).write(out, cli.format)?;
            }
        }
        Command::Verify { suite } => {
            let ev = Evaluator::new(cfg)?;
            let report = run_suite(&ev, Suite::from(*suite), cli.depth)?;
            for c in &report.checks {
                info!("{}: {:e} vs {:e} {}", c.name, c.measured, c.limit, if c.passed { "ok" } else { "FAIL" });
            }
            let passed = report.passed();
            let rows: Vec<VerifyRow> = report.checks.iter().map(|c| VerifyRow::new(&report, c)).collect();
            OutputRecord::new(argv, echo, rows).write(out, cli.format)?;
            if !passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let result = run(&cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
