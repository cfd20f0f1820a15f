use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use forest_resolution::cli::{self, Command, DotGraph, Format, Method, RandomSpec, RunConfig};
use forest_resolution::symbols::DEFAULT_CAP;

#[derive(Parser)]
#[command(
    name = "forest-res",
    version,
    about = "Minimal free resolutions of edge ideals of forests"
)]
struct Args {
    /// Root vertex per component, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    root: Option<Vec<String>>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Primes for the homology routes; the first is the default field.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [32003u64, 101])]
    prime: Vec<u64>,
    /// Bound on exhaustive enumerations (generators or vertices).
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Procedure,
    Filter,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Dual,
    Region,
    Both,
}

#[derive(Subcommand)]
enum Sub {
    /// List the F-admissible symbols.
    Symbols {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Procedure)]
        method: MethodArg,
        /// Also classify every symbol (class, gaps, bridges).
        #[arg(long)]
        all: bool,
    },
    /// Graded and multigraded Betti tables.
    Betti { input: Option<PathBuf> },
    /// Projective dimension.
    Pd { input: Option<PathBuf> },
    /// Differential matrices of the minimal resolution.
    Resolution { input: Option<PathBuf> },
    /// Cross-check every route; exit 3 on disagreement.
    Verify {
        input: Option<PathBuf>,
        /// Check a seeded corpus of N random forests instead of an input.
        #[arg(long, requires = "max_edges")]
        random: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Self-test: corrupt one differential entry before checking.
        #[arg(long)]
        corrupt: bool,
    },
    /// DOT documents for the dual graph and a Morse region.
    Dot {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphArg::Both)]
        graph: GraphArg,
        /// Column symbol, e.g. "0*1,2*3"; defaults to the last F-admissible one.
        #[arg(long)]
        column: Option<String>,
        /// Target cell of the gradient paths.
        #[arg(long)]
        target: Option<String>,
    },
}

fn config(args: Args) -> RunConfig {
    let (input, command) = match args.command {
        Sub::Symbols { input, method, all } => (
            input,
            Command::Symbols {
                method: match method {
                    MethodArg::Procedure => Method::Procedure,
                    MethodArg::Filter => Method::Filter,
                    MethodArg::Both => Method::Both,
                },
                classify_all: all,
            },
        ),
        Sub::Betti { input } => (input, Command::Betti),
        Sub::Pd { input } => (input, Command::Pd),
        Sub::Resolution { input } => (input, Command::Resolution),
        Sub::Verify {
            input,
            random,
            max_edges,
            seed,
            corrupt,
        } => (
            input,
            Command::Verify {
                random: random.map(|count| RandomSpec {
                    count,
                    max_edges: max_edges.unwrap_or(8),
                    seed,
                }),
                corrupt,
            },
        ),
        Sub::Dot {
            input,
            graph,
            column,
            target,
        } => (
            input,
            Command::Dot {
                graph: match graph {
                    GraphArg::Dual => DotGraph::Dual,
                    GraphArg::Region => DotGraph::Region,
                    GraphArg::Both => DotGraph::Both,
                },
                column,
                target,
            },
        ),
    };
    RunConfig {
        input,
        command,
        roots: args.root,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
        primes: args.prime,
        cap: args.cap,
        out: args.out,
    }
}

fn read_input(cfg: &RunConfig) -> std::io::Result<String> {
    if matches!(
        cfg.command,
        Command::Verify {
            random: Some(_),
            ..
        }
    ) {
        return Ok(String::new());
    }
    match &cfg.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let cfg = config(args);
    let text = match read_input(&cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    match cli::run(&cfg, &text) {
        Ok(outcome) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
