//! Command-line front end. Exit status: 0 success, 1 bound violations found,
//! 2 usage or input errors.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{check_bounds, BoundId};
use crate::distance::InvariantReport;
use crate::error::Error;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::output::{self, to_json};
use crate::search::{self, GraphSource};
use crate::spectra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "distspec", version, about = "Distance spectra, remoteness and bound verification")]
pub struct Cli {
    /// Worker threads for sweeps (default: machine parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance invariants of each input graph.
    Compute(PerGraph),
    /// Distance and Laplacian spectra of each input graph.
    Spectrum(PerGraph),
    /// Evaluate bounds on each input graph.
    Check {
        #[command(flatten)]
        graph: PerGraph,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
    },
    /// Sweep bounds over an exhaustive or random graph source.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Isomorphism classes attaining the smallest margin of one bound.
    Extremal {
        /// Graph order (2..=8).
        #[arg(long)]
        n: usize,
        /// Bound id.
        #[arg(long)]
        bound: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reproduce the table of d/2 and d_floor(7d/8)(P_{d+1}) for d = 2..10.
    Table1 {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct PerGraph {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// A graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file: the order on the first line, then `u v` per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Family spec such as path:7, cmb:3,3,2, gab:9,2,3, kme:6.
    #[arg(long)]
    pub family: Option<String>,
    /// File of graph6 lines (`-` for standard input); one result per line.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Graph order.
    #[arg(long)]
    pub n: usize,
    /// One representative per isomorphism class.
    #[arg(long)]
    pub dedup: bool,
    /// With --dedup, permit orders above 7 (up to 10).
    #[arg(long)]
    pub allow_large: bool,
    /// Random mode: edge probability.
    #[arg(long, requires = "samples")]
    pub p: Option<f64>,
    /// Random mode: number of sampled graphs.
    #[arg(long, requires = "p")]
    pub samples: Option<usize>,
    /// Random mode: master seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What a run produced: exit status and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send)) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(cli.command, stdin)),
            Err(e) => Outcome::usage(e),
        },
        None => execute(cli.command, stdin),
    }
}

fn execute(cmd: Command, stdin: &mut (dyn Read + Send)) -> Outcome {
    let (result, out) = match cmd {
        Command::Compute(pg) => (run_compute(&pg.input, pg.out.format, stdin), pg.out),
        Command::Spectrum(pg) => (run_spectrum(&pg.input, pg.out.format, stdin), pg.out),
        Command::Check { graph, bounds } => (run_check(&graph.input, &bounds, graph.out.format, stdin), graph.out),
        Command::Verify { source, bounds, out } => (run_verify(&source, &bounds, out.format), out),
        Command::Extremal { n, bound, out } => (run_extremal(n, &bound, out.format), out),
        Command::Table1 { out } => (Ok((render_table1(out.format), false)), out),
    };
    match result {
        Err(e) => Outcome::usage(e),
        Ok((text, violated)) => {
            let code = if violated { EXIT_VIOLATION } else { EXIT_OK };
            match &out.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome::usage(format!("cannot write {}: {e}", path.display())),
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
    }
}

type Rendered = Result<(String, bool), String>;

fn read_graphs(input: &InputArgs, stdin: &mut (dyn Read + Send)) -> Result<Vec<Graph>, String> {
    let err = |e: Error| e.to_string();
    if let Some(s) = &input.graph6 {
        return Ok(vec![parse_graph6(s).map_err(err)?]);
    }
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        return Ok(vec![spec.build().map_err(err)?]);
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        return Ok(vec![Graph::parse_edge_list(&text).map_err(err)?]);
    }
    let path = input.input.as_ref().ok_or("no input given")?;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| format!("cannot read standard input: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with(">>graph6<<"))
        .map(|l| parse_graph6(l).map_err(|e| format!("{l:?}: {e}")))
        .collect()
}

fn graph6_of(g: &Graph) -> Result<String, String> {
    write_graph6(g).map_err(|e| e.to_string())
}

fn json_lines<T: serde::Serialize>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| to_json(&x) + "\n").collect()
}

fn run_compute(input: &InputArgs, format: Format, stdin: &mut (dyn Read + Send)) -> Rendered {
    let mut records = vec![];
    for g in read_graphs(input, stdin)? {
        let report = InvariantReport::compute(&g).map_err(|e| e.to_string())?;
        records.push((graph6_of(&g)?, report));
    }
    let text = match format {
        Format::Json => json_lines(records.iter().map(|(g6, r)| output::ComputeRecord { graph6: g6, invariants: r })),
        Format::Csv => output::compute_csv(&records),
        Format::Text => records.iter().map(|(g6, r)| output::compute_text(g6, r)).collect(),
    };
    Ok((text, false))
}

fn run_spectrum(input: &InputArgs, format: Format, stdin: &mut (dyn Read + Send)) -> Rendered {
    let mut records = vec![];
    for g in read_graphs(input, stdin)? {
        let dist = spectra::distance_spectrum(&g).map_err(|e| e.to_string())?;
        let lap = spectra::laplacian_spectrum(&g).map_err(|e| e.to_string())?;
        records.push((graph6_of(&g)?, dist, lap));
    }
    let text = match format {
        Format::Json => json_lines(records.iter().map(|(g6, d, l)| output::SpectrumRecord {
            graph6: g6,
            distance: d,
            laplacian: l,
        })),
        Format::Csv => output::spectrum_csv(&records),
        Format::Text => records.iter().map(|(g6, d, l)| output::spectrum_text(g6, d, l)).collect(),
    };
    Ok((text, false))
}

fn run_check(input: &InputArgs, bounds: &str, format: Format, stdin: &mut (dyn Read + Send)) -> Rendered {
    let ids = BoundId::parse_list(bounds).map_err(|e| e.to_string())?;
    let mut records = vec![];
    for g in read_graphs(input, stdin)? {
        let checks = check_bounds(&ids, &g).map_err(|e| e.to_string())?;
        records.push((graph6_of(&g)?, checks));
    }
    let violated = records.iter().flat_map(|(_, c)| c).any(|c| c.violated());
    let text = match format {
        Format::Json => json_lines(records.iter().map(|(g6, c)| output::CheckRecord { graph6: g6, checks: c })),
        Format::Csv => output::check_csv(&records),
        Format::Text => records.iter().map(|(g6, c)| output::check_text(g6, c)).collect(),
    };
    Ok((text, violated))
}

fn run_verify(source: &SourceArgs, bounds: &str, format: Format) -> Rendered {
    let ids = BoundId::parse_list(bounds).map_err(|e| e.to_string())?;
    let src = match (source.p, source.samples) {
        (Some(p), Some(samples)) => GraphSource::RandomConnected { n: source.n, p, samples, seed: source.seed },
        _ if source.dedup => GraphSource::ExhaustiveDedup { n: source.n, allow_large: source.allow_large },
        _ => GraphSource::ExhaustiveLabeled { n: source.n },
    };
    let report = search::verify(&ids, &src).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => to_json(&report) + "\n",
        Format::Csv => output::verify_csv(&report),
        Format::Text => output::verify_text(&report),
    };
    Ok((text, report.total_violations() > 0))
}

fn run_extremal(n: usize, bound: &str, format: Format) -> Rendered {
    let id: BoundId = bound.parse().map_err(|e: Error| e.to_string())?;
    let ranked = search::extremal_search(id, n).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => to_json(&ranked) + "\n",
        Format::Csv => output::extremal_csv(&ranked),
        Format::Text => output::extremal_text(&ranked),
    };
    Ok((text, false))
}

fn render_table1(format: Format) -> String {
    let rows = search::table1();
    match format {
        Format::Json => to_json(&output::table1_records(&rows)) + "\n",
        Format::Csv => output::table1_csv(&rows),
        Format::Text => output::table1_text(&rows),
    }
}
