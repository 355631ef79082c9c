use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cpg::{Algorithm, CliError, FilterMode, GenRequest, Result, Summary};
use cpg_core::Constraints;

/// Generate, filter and classify cycle permutation graphs.
#[derive(Parser)]
#[command(name = "cpg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all cycle permutation graphs of order N as graph6.
    Gen(GenArgs),
    /// Read graph6 from standard input and report on each graph.
    Filter(FilterArgs),
    /// Build a non-hamiltonian cycle permutation graph of order N.
    Construct { n: usize },
    /// Run the slow reference generator.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Ccpm,
    Orderly,
}

#[derive(Args)]
struct ConstraintArgs {
    /// Minimum girth.
    #[arg(long, default_value_t = 0)]
    girth: u32,
    /// Only non-hamiltonian graphs.
    #[arg(long)]
    non_hamiltonian: bool,
}

impl ConstraintArgs {
    fn constraints(&self) -> Constraints {
        Constraints { min_girth: self.girth, non_hamiltonian: self.non_hamiltonian }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write graphs here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Print only the summary.
    #[arg(long, conflicts_with = "output")]
    count_only: bool,
}

#[derive(Args)]
struct GenArgs {
    n: usize,
    #[command(flatten)]
    constraints: ConstraintArgs,
    /// Keep only graphs that are not 3-edge-colourable (implies
    /// --non-hamiltonian).
    #[arg(long)]
    snarks_only: bool,
    #[arg(long, value_enum, default_value = "ccpm")]
    algorithm: AlgorithmArg,
    /// Drop repeated isomorphism classes.
    #[arg(long)]
    dedup: bool,
    /// Disable the hamiltonian-cycle lookaheads of the orderly generator.
    #[arg(long)]
    no_lookaheads: bool,
    #[arg(long, default_value_t = 0)]
    res: u64,
    #[arg(long = "mod", default_value_t = 1)]
    modulus: u64,
    /// Depth at which the search tree is sliced.
    #[arg(long)]
    split_depth: Option<usize>,
    /// Worker threads, each running a refined slice.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FilterArgs {
    /// List the permutation 2-factors of each graph.
    #[arg(long, conflicts_with = "classify")]
    enumerate_factors: bool,
    /// Report girth, hamiltonicity, colourability and cyclic
    /// 5-edge-connectivity.
    #[arg(long)]
    classify: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    n: usize,
    #[command(flatten)]
    constraints: ConstraintArgs,
    /// Largest order accepted.
    #[arg(long, default_value_t = cpg_core::oracle::DEFAULT_LIMIT)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn sink(path: &Option<PathBuf>, count_only: bool) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None if count_only => Box::new(io::sink()),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<Summary> {
    match cli.command {
        Command::Gen(a) => {
            if a.jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            if a.split_depth.is_some() && a.modulus == 1 && a.jobs == 1 {
                return Err(CliError::Usage("--split-depth needs --mod or --jobs".into()));
            }
            if a.no_lookaheads && !matches!(a.algorithm, AlgorithmArg::Orderly) {
                return Err(CliError::Usage("--no-lookaheads applies to --algorithm orderly".into()));
            }
            let req = GenRequest {
                order: a.n,
                constraints: a.constraints.constraints(),
                snarks_only: a.snarks_only,
                algorithm: match a.algorithm {
                    AlgorithmArg::Ccpm => Algorithm::Ccpm,
                    AlgorithmArg::Orderly => Algorithm::Orderly,
                },
                dedup: a.dedup,
                count_only: a.output.count_only,
                residue: a.res,
                modulus: a.modulus,
                split_depth: a.split_depth,
                jobs: a.jobs,
                lookaheads: !a.no_lookaheads,
            };
            let mut out = sink(&a.output.output, a.output.count_only)?;
            cpg::generate(&req, &mut out)
        }
        Command::Filter(a) => {
            let mode = if a.classify {
                FilterMode::Classify
            } else if a.enumerate_factors {
                FilterMode::EnumerateFactors
            } else {
                FilterMode::Recognize
            };
            let mut out = sink(&a.output, false)?;
            cpg::filter(&mut io::stdin().lock(), &mut out, mode)
        }
        Command::Construct { n } => cpg::construct(n, &mut sink(&None, false)?),
        Command::Oracle(a) => {
            let mut out = sink(&a.output.output, a.output.count_only)?;
            cpg::run_oracle(a.n, a.constraints.constraints(), a.limit, &mut out, a.output.count_only)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(summary) => {
            let _ = summary.write_to(&mut io::stderr().lock());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cpg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
