use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use strongcommon::cli::{
    self, CliCommand, CliError, GraphFormat, RunConfig,
};
use strongcommon::density::Caps;
use strongcommon::rational::parse_rational;

/// Exact-rational certification that graphs of odd girth other than
/// cycles are not strongly common.
#[derive(Parser)]
#[command(name = "strongcommon", version, about)]
struct Invocation {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report girth, cycle structure and the witness ε-polynomial
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        /// Expansion point for the ε-polynomial, as P/Q
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a counterexample certificate for (graph, alpha)
    Certify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edge density of the witness kernel, as P/Q (not 1/2)
        #[arg(long)]
        alpha: String,
        /// Witness perturbation, as P/Q; defaults to half the threshold
        #[arg(long)]
        epsilon: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate deficits over a grid of alphas
    Scan {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated alphas, e.g. 3/5,3/4,9/10
        #[arg(long, value_name = "P1/Q1,P2/Q2,...")]
        alpha_grid: String,
        /// Fixed epsilon for every row, as P/Q; defaults per row
        #[arg(long)]
        epsilon: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recheck a certificate file through the other evaluator
    Verify {
        /// Path to a certificate JSON file
        certificate: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Path to the graph file
    #[arg(long)]
    graph: PathBuf,
    /// Input format of the graph file
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON document here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap on direct-enumeration assignments m^v
    #[arg(long, default_value_t = Caps::default().max_assignments)]
    cap_assignments: u64,
    /// Cap on the cycle-space dimension for even-subgraph enumeration
    #[arg(long, default_value_t = Caps::default().max_cycle_dimension)]
    cap_cyclespace: u32,
    /// Cap on the edge count for the full subset expansion
    #[arg(long, default_value_t = Caps::default().max_subset_edges)]
    cap_subsets: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

fn main() -> ExitCode {
    let invocation = match Invocation::try_parse() {
        Ok(invocation) => invocation,
        Err(error) => {
            let kind = error.kind();
            let _ = error.print();
            return if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match execute(invocation) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}

fn execute(invocation: Invocation) -> Result<(), CliError> {
    let (config, out) = build_config(invocation)?;
    let document = cli::run(&config)?;
    match out {
        Some(path) => fs::write(&path, document).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{document}");
            Ok(())
        }
    }
}

fn build_config(invocation: Invocation) -> Result<(RunConfig, Option<PathBuf>), CliError> {
    let rational = |text: &str| {
        parse_rational(text).map_err(|e| CliError::Parse(e.to_string()))
    };
    match invocation.command {
        Command::Analyze {
            graph,
            alpha,
            output,
        } => {
            let mut config = RunConfig::new(CliCommand::Analyze);
            apply_graph_args(&mut config, graph);
            config.alpha = alpha.as_deref().map(rational).transpose()?;
            Ok(finish(config, output))
        }
        Command::Certify {
            graph,
            alpha,
            epsilon,
            output,
        } => {
            let mut config = RunConfig::new(CliCommand::Certify);
            apply_graph_args(&mut config, graph);
            config.alpha = Some(rational(&alpha)?);
            config.epsilon = epsilon.as_deref().map(rational).transpose()?;
            Ok(finish(config, output))
        }
        Command::Scan {
            graph,
            alpha_grid,
            epsilon,
            output,
        } => {
            let mut config = RunConfig::new(CliCommand::Scan);
            apply_graph_args(&mut config, graph);
            config.alpha_grid = cli::parse_alpha_grid(&alpha_grid)?;
            config.epsilon = epsilon.as_deref().map(rational).transpose()?;
            Ok(finish(config, output))
        }
        Command::Verify {
            certificate,
            output,
        } => {
            let mut config = RunConfig::new(CliCommand::Verify);
            config.certificate_path = Some(certificate);
            Ok(finish(config, output))
        }
    }
}

fn apply_graph_args(config: &mut RunConfig, args: GraphArgs) {
    config.graph_path = Some(args.graph);
    config.format = match args.format {
        FormatArg::Edgelist => GraphFormat::EdgeList,
        FormatArg::Graph6 => GraphFormat::Graph6,
    };
}

fn finish(mut config: RunConfig, output: OutputArgs) -> (RunConfig, Option<PathBuf>) {
    config.caps = Caps {
        max_assignments: output.cap_assignments,
        max_cycle_dimension: output.cap_cyclespace,
        max_subset_edges: output.cap_subsets,
    };
    (config, output.out)
}
