//! `curvex`: exact curvature indices of graphs from the command line.
//!
//! Every subcommand prints one JSON document on stdout. Domain errors go to
//! stderr as `{"error": NAME, "message": ...}` with exit code 1; usage
//! errors exit with code 2.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "curvex", version, about = "Exact curvature index toolkit")]
struct Cli {
    /// Add floating-point approximations next to exact rationals.
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false, id = "source")]
struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Named family: path, cycle, complete, multipartite, hypercube, grid,
    /// torus, basket, empty.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct GraphArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Part sizes for `multipartite`, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MergeArg {
    First,
    Spread,
    Random,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum EgyptianArg {
    Greedy,
    Compact,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum CompositionArg {
    Coalescence,
    Product,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact index with its certificate.
    Index(GraphArgs),
    /// Distance exceptional test with certificate.
    DxCheck(GraphArgs),
    /// Steinerberger curvature (minimum-norm solution of D k = n 1).
    Curvature(GraphArgs),
    /// Embed a graph as an induced subgraph of a distance exceptional graph.
    Embed {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "first")]
        merge_vertex: MergeArg,
        /// Required with `--merge-vertex random`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "compact")]
        egyptian: EgyptianArg,
        /// Also write the construction trace as JSON lines.
        #[arg(long)]
        trace_out: Option<std::path::PathBuf>,
    },
    /// Rebuild a graph from a JSON-lines construction trace.
    Replay {
        #[arg(long)]
        trace: std::path::PathBuf,
    },
    /// Build a graph with a prescribed rational index.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value = "compact")]
        egyptian: EgyptianArg,
        #[arg(long, value_enum, default_value = "coalescence")]
        composition: CompositionArg,
    },
    /// Add pendants to basket(2j+1) until the index reaches zero.
    Jailbreak {
        #[arg(long)]
        j: usize,
        #[arg(long, required_unless_present = "placement")]
        seed: Option<u64>,
        /// Number of pendants; defaults to the count that reaches zero.
        #[arg(long)]
        pendants: Option<usize>,
        /// Explicit attachment vertices, comma separated.
        #[arg(long, value_delimiter = ',')]
        placement: Option<Vec<usize>>,
    },
    /// Index census of a graph6 file (`-` for stdin).
    Scan {
        #[arg(long)]
        input: String,
        #[arg(long, env = "CURVEX_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Write the index histogram as CSV to this file.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
    },
    /// List connected graphs of order n (n <= 7), one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Report the index census instead of the list.
        #[arg(long)]
        census: bool,
        #[arg(long, env = "CURVEX_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Exact indices of connected Erdős–Rényi samples.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: String,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, env = "CURVEX_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Check every closed-form family index against direct computation.
    VerifyFamilies {
        #[arg(long, default_value_t = 9)]
        kmax: usize,
        /// Seed for the random trees.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Graphviz DOT of a graph.
    Dot {
        #[command(flatten)]
        graph: GraphArgs,
        /// Print bare DOT instead of wrapping it in JSON.
        #[arg(long)]
        raw: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(commands::Failure::Domain(e)) => {
            let body = serde_json::json!({ "error": e.name(), "message": e.to_string() });
            eprintln!("{body}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
