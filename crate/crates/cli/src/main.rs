use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use surfinv_core::catalog::{Catalog, PairId};
use surfinv_core::pipeline::{run_pipeline, symbolic_pipeline};
use surfinv_core::quotients::{solve_fixed_point_profile, ProfileConstraints};
use surfinv_core::render::{render_pair, render_summary, render_table, OutputFormat};
use surfinv_core::sections::{invariant_monomial_basis, WeightConfig};
use surfinv_core::verify::verify;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EMPTY: u8 = 3;

/// Invariants of canonical-cover series built from generating pairs.
#[derive(Parser)]
#[command(name = "surfinv", version)]
struct Cli {
    /// Output format; defaults to markdown on a terminal and json otherwise.
    #[arg(long, global = true, env = "SURFINV_FORMAT")]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of X and S for a generating pair.
    Pair(PairArgs),
    /// One row per k for an example series.
    Table(TableArgs),
    /// Feasible fixed-point profiles (alpha,beta) of a Z/3 action.
    Solve(SolveArgs),
    /// Invariant monomials in the sections of a linearized bundle.
    Basis(BasisArgs),
    /// Run every consistency check over the catalog.
    Verify(VerifyArgs),
    /// Print the catalog as JSON.
    Catalog,
}

#[derive(Args)]
struct CatalogArg {
    /// Catalog JSON to use instead of the built-in one.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    id: PairId,
    #[arg(long, conflicts_with = "symbolic", required_unless_present = "symbolic",
          value_parser = clap::value_parser!(i64).range(3..))]
    n: Option<i64>,
    #[arg(long)]
    symbolic: bool,
    #[command(flatten)]
    catalog: CatalogArg,
}

#[derive(Clone, Debug)]
struct KRange {
    start: u64,
    end: u64,
}

impl FromStr for KRange {
    type Err = String;

    /// `3`, `1..5` or `1..=5`; both ends inclusive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if start < 1 {
            return Err("k must be at least 1".into());
        }
        if end < start {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(KRange { start, end })
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    example: u8,
    #[arg(long, conflicts_with = "symbolic", required_unless_present = "symbolic")]
    k: Option<KRange>,
    /// A single row of linear forms in k.
    #[arg(long)]
    symbolic: bool,
    #[command(flatten)]
    catalog: CatalogArg,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    k2: i64,
    #[arg(long, allow_hyphen_values = true)]
    chi: i64,
    /// Number of isolated fixed points, alpha + beta.
    #[arg(long)]
    fixed: u64,
    #[arg(long, default_value_t = 0)]
    beta_min: u64,
    /// Require the quotient to have K2 >= 0.
    #[arg(long)]
    require_k2_nonneg: bool,
}

#[derive(Args)]
struct BasisArgs {
    /// Weights of the sections f_i, each in 0..=2.
    #[arg(long, value_delimiter = ',', required = true,
          value_parser = clap::value_parser!(u8).range(0..=2))]
    weights: Vec<u8>,
    /// Weights of x0 and x1.
    #[arg(long, value_delimiter = ',', num_args = 1, required = true,
          value_parser = clap::value_parser!(u8).range(0..=2))]
    u: Vec<u8>,
    #[arg(long)]
    degree: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    k_max: u64,
    #[command(flatten)]
    catalog: CatalogArg,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn load_catalog(arg: &CatalogArg) -> Result<Catalog, ExitCode> {
    let Some(path) = &arg.catalog else {
        return Ok(Catalog::standard());
    };
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Catalog::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            OutputFormat::Markdown
        } else {
            OutputFormat::Json
        }
    });
    match run(cli.command, format) {
        Ok(code) | Err(code) => code,
    }
}

fn run(command: Command, format: OutputFormat) -> Result<ExitCode, ExitCode> {
    match command {
        Command::Pair(a) => {
            let catalog = load_catalog(&a.catalog)?;
            let rows = match a.n {
                Some(n) => catalog.pair_invariants(a.id, n),
                None => catalog.pair_invariants_symbolic(a.id),
            };
            let (x, s) = rows.map_err(usage)?;
            print!("{}", render_pair(a.id, a.n, &x, &s, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(a) => {
            let catalog = load_catalog(&a.catalog)?;
            let reports = match &a.k {
                Some(range) => (range.start..=range.end)
                    .map(|k| run_pipeline(&catalog, a.example, k))
                    .collect::<Result<Vec<_>, _>>(),
                None => symbolic_pipeline(&catalog, a.example).map(|r| vec![r]),
            };
            let reports = reports.map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_CHECK_FAILED)
            })?;
            print!("{}", render_table(&reports, format));
            let mut ok = true;
            for r in &reports {
                for c in r.failures() {
                    ok = false;
                    let at = r.k.map_or_else(|| "symbolic".to_string(), |k| format!("k={k}"));
                    eprintln!(
                        "check failed: example {} at {at}: {}: expected {}, got {}",
                        r.example, c.name, c.expected, c.actual
                    );
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CHECK_FAILED) })
        }
        Command::Solve(a) => {
            let constraints = ProfileConstraints {
                beta_min: a.beta_min,
                require_k2_nonneg: a.require_k2_nonneg,
            };
            let found = solve_fixed_point_profile(a.k2, a.chi, a.fixed, constraints);
            for p in &found {
                println!("{p}");
            }
            Ok(if found.is_empty() { ExitCode::from(EXIT_EMPTY) } else { ExitCode::SUCCESS })
        }
        Command::Basis(a) => {
            if a.u.len() != 2 {
                return Err(usage("--u takes exactly two weights, e.g. --u 1,2"));
            }
            let cfg = WeightConfig::new(a.weights, a.u[0], a.u[1], a.degree).map_err(usage)?;
            println!("{}", invariant_monomial_basis(&cfg));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => {
            let catalog = load_catalog(&a.catalog)?;
            let summary = verify(&catalog, a.k_max);
            print!("{}", render_summary(&summary, format));
            Ok(if summary.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CHECK_FAILED) })
        }
        Command::Catalog => {
            println!("{}", Catalog::standard().to_json());
            Ok(ExitCode::SUCCESS)
        }
    }
}
