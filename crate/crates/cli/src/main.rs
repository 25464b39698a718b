//! `tcheck`: journey closures and temporal connectivity from the command line.
//!
//! Exit status: 0 success (or connected), 1 not connected, 2 usage error,
//! 3 input or I/O error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use tcheck_core::closure::{closure_from_steps, parse_closure, write_closure, ConnectivityReport};
use tcheck_core::oracle::oracle_connectivity;
use tcheck_core::teg::{write_teg, TegError, TegReader};
use tcheck_core::workload::{
    bench_grid_with, read_grid, scaling_report, write_csv, ArcModel, BenchOptions, GeneratorSpec,
};
use tcheck_core::{generate, ClosureError, JourneySemantics, VertexId};

const EXIT_NOT_CONNECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "tcheck", version, about = "Temporal connectivity of evolving graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SemanticsArgs {
    /// At most one arc crossed per step (default).
    #[arg(long, conflicts_with = "non_strict")]
    strict: bool,
    /// Any number of arcs crossed per step.
    #[arg(long)]
    non_strict: bool,
}

impl SemanticsArgs {
    fn semantics(self) -> JourneySemantics {
        if self.non_strict {
            JourneySemantics::NonStrict
        } else {
            JourneySemantics::Strict
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the journey transitive closure of a teg file.
    Close {
        #[arg(long = "in", value_name = "PATH|-")]
        input: String,
        #[arg(long, value_name = "PATH|-")]
        out: String,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
    /// Decide temporal connectivity, stopping at the first complete step.
    Connected {
        #[arg(long = "in", value_name = "PATH|-")]
        input: String,
        #[command(flatten)]
        semantics: SemanticsArgs,
        /// Use the time-expanded reference instead of the streaming engine.
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Test whether a journey u ⇝ v exists, from a teg or tc file.
    Query {
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        u: u32,
        v: u32,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
    /// Write a random evolving graph.
    #[command(group(ArgGroup::new("model").required(true).args(["p", "mu"])))]
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Per-step probability of each ordered pair.
        #[arg(long)]
        p: Option<f64>,
        /// Exact number of arcs per step.
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "PATH|-")]
        out: String,
    },
    /// Time closures over a grid of generator specs and write CSV.
    Bench {
        /// CSV with header `n,k,model,value,seed`.
        #[arg(long, value_name = "PATH")]
        grid: PathBuf,
        #[arg(long)]
        reps: usize,
        #[arg(long, value_name = "PATH|-")]
        out: String,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
}

enum CliError {
    Usage(String),
    Input(String),
}

impl CliError {
    fn io(path: &str, e: io::Error) -> Self {
        CliError::Input(format!("{path}: {e}"))
    }

    fn teg(path: &str, e: TegError) -> Self {
        match e {
            TegError::Syntax { line, kind } => CliError::Input(format!("{path}:{line}: {kind}")),
            TegError::Io(e) => CliError::io(path, e),
        }
    }
}

/// Failure while streaming steps into the engine.
enum StreamError {
    Teg(TegError),
    Closure(ClosureError),
}

impl From<ClosureError> for StreamError {
    fn from(e: ClosureError) -> Self {
        StreamError::Closure(e)
    }
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        return Ok(Box::new(io::stdin().lock()));
    }
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    Ok(Box::new(BufReader::new(file)))
}

fn open_output(path: &str) -> Result<Box<dyn Write>, CliError> {
    if path == "-" {
        return Ok(Box::new(io::stdout().lock()));
    }
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    Ok(Box::new(io::BufWriter::new(file)))
}

/// Streams a teg input through the closure engine. Reading stops at the
/// first step that completes the closure.
fn stream_closure(
    path: &str,
    semantics: JourneySemantics,
) -> Result<ConnectivityReport, CliError> {
    let mut reader = TegReader::new(open_input(path)?).map_err(|e| CliError::teg(path, e))?;
    let n = reader.n();
    let steps = std::iter::from_fn(|| reader.next_step().map_err(StreamError::Teg).transpose());
    let report = closure_from_steps(n, semantics, steps).map_err(|e| match e {
        StreamError::Teg(e) => CliError::teg(path, e),
        StreamError::Closure(e) => CliError::Input(format!("{path}: {e}")),
    })?;
    warn_dropped_loops(path, reader.dropped_loops());
    Ok(report)
}

fn warn_dropped_loops(path: &str, dropped: usize) {
    if dropped > 0 {
        eprintln!("tcheck: warning: {path}: dropped {dropped} self-loop(s)");
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Close {
            input,
            out,
            semantics,
        } => {
            let report = stream_closure(&input, semantics.semantics())?;
            let w = open_output(&out)?;
            write_closure(&report, w).map_err(|e| CliError::io(&out, e))?;
            Ok(0)
        }
        Command::Connected {
            input,
            semantics,
            oracle,
        } => {
            let semantics = semantics.semantics();
            let (connected, step) = if oracle {
                let reader = TegReader::new(open_input(&input)?).map_err(|e| CliError::teg(&input, e))?;
                let g = reader.read_graph().map_err(|e| CliError::teg(&input, e))?;
                oracle_connectivity(&g, semantics)
                    .map_err(|e| CliError::Input(format!("{input}: {e}")))?
            } else {
                let report = stream_closure(&input, semantics)?;
                (report.connected, report.completed_at_step)
            };
            match step {
                Some(t) if connected => {
                    println!("true step={t}");
                    Ok(0)
                }
                _ => {
                    println!("false");
                    Ok(EXIT_NOT_CONNECTED)
                }
            }
        }
        Command::Query {
            input,
            u,
            v,
            semantics,
        } => {
            let closure = load_closure(&input, semantics.semantics())?;
            let exists = closure
                .journey_exists(VertexId(u), VertexId(v))
                .map_err(|e| CliError::Input(format!("{input}: {e}")))?;
            println!("{exists}");
            Ok(0)
        }
        Command::Generate {
            n,
            k,
            p,
            mu,
            seed,
            out,
        } => {
            let model = match (p, mu) {
                (Some(p), None) => ArcModel::PerStepBernoulli { p },
                (None, Some(mu)) => ArcModel::FixedMu { mu },
                _ => unreachable!("clap enforces exactly one of --p and --mu"),
            };
            let spec = GeneratorSpec { n, k, model, seed };
            let g = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            let w = open_output(&out)?;
            write_teg(&g, w).map_err(|e| CliError::io(&out, e))?;
            Ok(0)
        }
        Command::Bench {
            grid,
            reps,
            out,
            semantics,
        } => {
            if reps == 0 {
                return Err(CliError::Usage("--reps must be at least 1".into()));
            }
            let grid_path = grid.display().to_string();
            let file = File::open(&grid).map_err(|e| CliError::io(&grid_path, e))?;
            let specs = read_grid(BufReader::new(file))
                .map_err(|e| CliError::Input(format!("{grid_path}:{e}")))?;
            let options = BenchOptions {
                repetitions: reps,
                ..BenchOptions::default()
            };
            let records = bench_grid_with(&specs, semantics.semantics(), &options)
                .map_err(|e| CliError::Input(format!("{grid_path}: {e}")))?;
            let w = open_output(&out)?;
            write_csv(&records, w).map_err(|e| CliError::io(&out, e))?;
            if let Ok(report) = scaling_report(&records) {
                eprint!("{report}");
            }
            Ok(0)
        }
    }
}

/// Loads a `tc` file as is, or computes the closure of a `teg` file.
fn load_closure(
    path: &str,
    semantics: JourneySemantics,
) -> Result<tcheck_core::ClosureGraph, CliError> {
    let mut input = open_input(path)?;
    let is_tc = input
        .fill_buf()
        .map_err(|e| CliError::io(path, e))?
        .starts_with(b"tc ");
    if is_tc {
        let file = parse_closure(input).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        return Ok(file.closure);
    }
    let reader = TegReader::new(input).map_err(|e| CliError::teg(path, e))?;
    let g = reader.read_graph().map_err(|e| CliError::teg(path, e))?;
    Ok(tcheck_core::closure(&g, semantics).closure)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("tcheck: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("tcheck: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
