use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::time::Instant;

use ricciflat_core::classify::{
    classify, search_two_pentagon_completions_with_budget, ClassificationResult,
};
use ricciflat_core::curvature::idleness_report;
use ricciflat_core::generate::{generate, ingest_graph6, GenerationConfig, IngestFilter};
use ricciflat_core::{curvature_report, emit_graph6, named_graph, Error, Graph};

use crate::args::{
    ClassifyArgs, ClassifyFormat, CurvatureArgs, GenerateArgs, GraphSource, NamedArgs, ReportFormat,
};

#[derive(Debug)]
pub enum Failure {
    /// Bad input or flags: exit code 2.
    Usage(String),
    /// The input is well formed but the computation does not apply: exit code 3.
    Domain(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) | Failure::Io(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::MalformedGraph6(_)
            | Error::MalformedEdgeList(_)
            | Error::AtLine { .. }
            | Error::UnknownName(_)
            | Error::BadParameter(_)
            | Error::IdlenessOutOfRange(_)
            | Error::OddOrder(_)
            | Error::UnsupportedSize(_)
            | Error::EmptyGraph
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::IndexOutOfRange { .. }
            | Error::Io(_) => Failure::Usage(msg),
            _ => Failure::Domain(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

pub type Outcome = Result<(), Failure>;

fn open(path: &Path) -> Result<Box<dyn BufRead>, Failure> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(file)))
}

fn read_graphs(path: &Path, strict: bool) -> Result<Vec<Graph>, Failure> {
    let outcome = ingest_graph6(open(path)?, &IngestFilter::default(), strict)?;
    for e in &outcome.errors {
        eprintln!("warning: line {}: {}", e.line, e.message);
    }
    Ok(outcome.kept)
}

fn single_graph(source: &GraphSource) -> Result<Graph, Failure> {
    if let Some(name) = &source.named {
        return Ok(named_graph(name)?);
    }
    let path = source.graph6.as_deref().unwrap_or(Path::new("-"));
    let mut graphs = read_graphs(path, true)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        k => Err(Failure::Usage(format!(
            "expected exactly one graph, found {k}"
        ))),
    }
}

pub fn curvature(args: &CurvatureArgs, out: &mut dyn Write) -> Outcome {
    let g = single_graph(&args.source)?;
    let text = match (args.idleness, args.format) {
        (Some(p), ReportFormat::Table) => idleness_report(&g, p)?.to_table(),
        (Some(p), ReportFormat::Json) => idleness_report(&g, p)?.to_json_lines(),
        (None, ReportFormat::Table) => curvature_report(&g)?.to_table(),
        (None, ReportFormat::Json) => curvature_report(&g)?.to_json_lines(),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn generate_cmd(args: &GenerateArgs, out: &mut dyn Write) -> Outcome {
    let config = GenerationConfig::new(args.n)
        .with_girth(args.girth)
        .with_two_pentagon_pruning(args.prune_two_pentagon);
    let start = Instant::now();
    let graphs = generate(&config)?;
    eprintln!(
        "n={}: {} classes in {:.2?}",
        args.n,
        graphs.len(),
        start.elapsed()
    );
    if args.count_only {
        writeln!(out, "{}", graphs.len())?;
    } else {
        for g in &graphs {
            writeln!(out, "{}", emit_graph6(g))?;
        }
    }
    Ok(())
}

fn even_orders(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|n| n % 2 == 0)
}

fn classification(args: &ClassifyArgs) -> Result<ClassificationResult, Failure> {
    let input = &args.input;
    if let Some((lo, hi)) = input.generate {
        if even_orders(lo, hi).next().is_none() {
            return Err(Failure::Usage(format!("no even order in {lo}..{hi}")));
        }
        let mut graphs = Vec::new();
        for n in even_orders(lo, hi) {
            let start = Instant::now();
            let batch = generate(&GenerationConfig::new(n).with_girth(args.girth))?;
            eprintln!("n={n}: {} classes in {:.2?}", batch.len(), start.elapsed());
            graphs.extend(batch);
        }
        return Ok(classify(graphs));
    }
    if input.search {
        let max_n = args.max_n.expect("clap requires --max-n");
        let start = Instant::now();
        let found = search_two_pentagon_completions_with_budget(max_n, args.budget)?;
        eprintln!(
            "search up to n={max_n}: {} graphs, {} nodes in {:.2?}",
            found.graphs.len(),
            found.nodes,
            start.elapsed()
        );
        return Ok(classify(found.graphs));
    }
    if !input.named.is_empty() {
        let graphs = input
            .named
            .iter()
            .map(|n| named_graph(n))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(classify(graphs));
    }
    let path = input.graph6.as_deref().unwrap_or(Path::new("-"));
    Ok(classify(read_graphs(path, args.strict)?))
}

pub fn classify_cmd(args: &ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let result = classification(args)?;
    for s in &result.skipped {
        eprintln!("skipped #{} {}: {}", s.index, s.graph6, s.reason);
    }
    let text = match args.format {
        ClassifyFormat::Table => result.to_table(),
        ClassifyFormat::Json => result.to_json() + "\n",
        ClassifyFormat::Graph6 => result.to_graph6_lines(),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn named(args: &NamedArgs, out: &mut dyn Write) -> Outcome {
    writeln!(out, "{}", emit_graph6(&named_graph(&args.name)?))?;
    Ok(())
}
