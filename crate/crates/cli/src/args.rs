use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ricciflat_core::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "ricciflat",
    version,
    about = "Exact Ollivier and Lin-Lu-Yau curvature on graphs, and Ricci-flat cubic graphs"
)]
pub struct Cli {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true, env = "RICCI_SEED_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-edge curvature of one graph
    Curvature(CurvatureArgs),
    /// Connected cubic graphs on n vertices, one per isomorphism class
    Generate(GenerateArgs),
    /// Find the Ricci-flat graphs in a stream of graphs
    Classify(ClassifyArgs),
    /// Print the graph6 string of a named graph
    Named(NamedArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Named graph, e.g. petersen, triplex, dodecahedron, cycle:5, gp:7:2
    #[arg(long)]
    pub named: Option<String>,
    /// File with one graph6 string per line ("-" reads stdin)
    #[arg(long, value_name = "PATH")]
    pub graph6: Option<PathBuf>,
    /// Read graph6 from stdin
    #[arg(value_name = "-", value_parser = stdin_marker)]
    pub stdin: Option<String>,
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Report κ_p for this idleness instead of κ
    #[arg(long, value_name = "a/b")]
    pub idleness: Option<Rational>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(short = 'n', value_name = "INT")]
    pub n: usize,
    #[arg(long, default_value_t = 5)]
    pub girth: usize,
    /// Print only the number of classes
    #[arg(long)]
    pub count_only: bool,
    /// Keep only graphs in which every edge lies on two pentagons sharing just that edge
    #[arg(long)]
    pub prune_two_pentagon: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ClassifyInput {
    /// Generate cubic graphs for every even n in the range, e.g. 10..14
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    pub generate: Option<(usize, usize)>,
    /// File with one graph6 string per line ("-" reads stdin)
    #[arg(long, value_name = "PATH")]
    pub graph6: Option<PathBuf>,
    /// Named graphs, repeatable
    #[arg(long)]
    pub named: Vec<String>,
    /// Search for two-pentagon completions instead of enumerating
    #[arg(long, requires = "max_n")]
    pub search: bool,
    /// Read graph6 from stdin
    #[arg(value_name = "-", value_parser = stdin_marker)]
    pub stdin: Option<String>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: ClassifyInput,
    #[arg(long, value_name = "INT")]
    pub max_n: Option<usize>,
    /// Girth floor for --generate
    #[arg(long, default_value_t = 5)]
    pub girth: usize,
    /// Node limit for --search
    #[arg(long, default_value_t = ricciflat_core::classify::DEFAULT_SEARCH_BUDGET)]
    pub budget: u64,
    /// Abort on the first malformed graph6 line
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = ClassifyFormat::Table)]
    pub format: ClassifyFormat,
}

#[derive(Debug, Args)]
pub struct NamedArgs {
    pub name: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifyFormat {
    Table,
    Json,
    Graph6,
}

fn stdin_marker(s: &str) -> Result<String, String> {
    if s == "-" {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unexpected argument `{s}`; use --graph6 PATH for files"
        ))
    }
}

/// `a..b` or `a..=b` (both inclusive) or a single `n`.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}
