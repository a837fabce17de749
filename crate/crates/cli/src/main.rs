use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use medianforge::{ErrorClass, FiniteGraph, Generator};

mod commands;

#[derive(Parser)]
#[command(name = "medianforge", version, about = "Cuts, dual median graphs and canonical spanning trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate cuts with bounded boundary diameter
    Cuts(Common),
    /// Cuts, dual median graph, hyperplanes, colouring and spanning tree
    Pipeline(Common),
    /// Check the median property of the input graph
    CheckMedian(Common),
    /// Hyperplanes of a median input graph
    Hyperplanes(Common),
    /// Canonical spanning tree of a median input graph
    Tree(Common),
    /// Pair a median graph with the dual of its convex half-spaces
    Roundtrip(Common),
    /// Block sizes and successor counts of the cut pocset
    Density(Common),
    /// End counts and quasi-tree cuts of a generator truncation
    Ends(Common),
    /// Draw the input graph, or with --radius its dual
    Dot(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Edge-list file
    input: Option<PathBuf>,
    /// Generator spec: line, ladder, grid2d, regular_tree:K, decorated_tree:K:L
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
    /// Ball radius for --gen
    #[arg(long, value_name = "R")]
    truncate: Option<usize>,
    /// Bound on the diameter of cut boundaries
    #[arg(long, value_name = "R")]
    radius: Option<usize>,
    /// Vertex order used for tie-breaks
    #[arg(long, value_enum, default_value_t = Order::Input)]
    order: Order,
    /// Write JSON here instead of stdout
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Also write a DOT drawing here
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    #[arg(long, value_name = "N", default_value_t = medianforge::cuts::DEFAULT_SUBSET_BUDGET)]
    budget_subsets: usize,
    #[arg(long, value_name = "N", default_value_t = medianforge::dual::DEFAULT_ORIENTATION_BUDGET)]
    budget_orientations: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Input,
    Lex,
}

/// Where the graph came from.
enum Source {
    File(FiniteGraph),
    Truncation(medianforge::BallTruncation),
}

impl Source {
    fn graph(&self) -> &FiniteGraph {
        match self {
            Source::File(g) => g,
            Source::Truncation(t) => &t.graph,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    Core { stage: Option<&'static str>, error: medianforge::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core { error, .. } => match error.class() {
                ErrorClass::Input => 2,
                ErrorClass::Budget => 3,
                ErrorClass::Internal => 4,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core { stage: Some(s), error } => write!(f, "stage {s}: {error}"),
            CliError::Core { stage: None, error } => write!(f, "{error}"),
        }
    }
}

impl From<medianforge::Error> for CliError {
    fn from(error: medianforge::Error) -> Self {
        CliError::Core { stage: None, error }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Tags a core error with the pipeline stage that raised it.
fn stage<T>(name: &'static str, r: medianforge::Result<T>) -> CliResult<T> {
    r.map_err(|error| CliError::Core { stage: Some(name), error })
}

impl Common {
    fn radius(&self) -> CliResult<usize> {
        self.radius.ok_or_else(|| CliError::Usage("this command needs --radius".into()))
    }

    fn source(&self) -> CliResult<Source> {
        let source = match (&self.input, &self.generator) {
            (Some(path), None) => {
                if self.truncate.is_some() {
                    return Err(CliError::Usage("--truncate only applies to --gen".into()));
                }
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
                Source::File(stage("parse", medianforge::parse_graph(&text))?)
            }
            (None, Some(spec)) => {
                let generator: Generator = stage("generator", spec.parse())?;
                let radius = self.truncate.ok_or_else(|| CliError::Usage("--gen needs --truncate".into()))?;
                Source::Truncation(stage("truncate", medianforge::truncate(generator, radius))?)
            }
            (Some(_), Some(_)) => return Err(CliError::Usage("give either an input file or --gen, not both".into())),
            (None, None) => return Err(CliError::Usage("give an input file or --gen".into())),
        };
        Ok(match (source, self.order) {
            (s, Order::Input) => s,
            (Source::File(g), Order::Lex) => Source::File(g.relabel_lex()),
            (Source::Truncation(t), Order::Lex) => Source::File(t.graph.relabel_lex()),
        })
    }

    fn emit(&self, kind: &str, payload: serde_json::Value) -> CliResult<()> {
        let text = medianforge::export::to_pretty(&medianforge::export::document(kind, payload));
        match &self.json {
            Some(path) => {
                fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_dot(&self, dot: impl FnOnce() -> String) -> CliResult<()> {
        match &self.dot {
            Some(path) => {
                fs::write(path, dot()).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
            }
            None => Ok(()),
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Cuts(c) => commands::cuts(&c),
        Command::Pipeline(c) => commands::pipeline(&c),
        Command::CheckMedian(c) => commands::check_median(&c),
        Command::Hyperplanes(c) => commands::hyperplanes(&c),
        Command::Tree(c) => commands::tree(&c),
        Command::Roundtrip(c) => commands::roundtrip(&c),
        Command::Density(c) => commands::density(&c),
        Command::Ends(c) => commands::ends(&c),
        Command::Dot(c) => commands::dot(&c),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
