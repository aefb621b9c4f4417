//! `zagreb`: exact comparison of the first and second Zagreb indices,
//! construction of the G(x,y,z,w) equality family, degree-interval collision
//! scans, and exhaustive small-graph surveys.
//!
//! Exit codes: 0 when the result matches the predicted shape (or no
//! prediction applies), 2 when a scan or survey produces a surprise, 1 for
//! usage and IO errors.

mod formats;
mod parallel;
mod report;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use formats::{parse_file, write_graph, GraphFormat};
use parallel::{run_survey, worker_threads};
use report::{graph_report, Report};
use zagreb_core::enumerate::{enumerate, Dedup, EnumerationSpec};
use zagreb_core::family::{build_gxyzw, solve_params, CatalogFamily, FamilyParams};
use zagreb_core::graph::Graph;
use zagreb_core::intervals::{
    find_harmonic_collisions, find_product_collisions, good_threshold, scan_f_sign,
    CollisionReport, IntervalSpec,
};
use zagreb_core::zagreb::Verdict;

const EXIT_OK: u8 = 0;
const EXIT_SURPRISE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Exact Zagreb indices workbench: compare M1/n with M2/m, build equality families, scan degree intervals, survey small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full report for every graph in a file
    Compute(ComputeArgs),
    /// Build G(x,y,z,w), optionally solving (x, w) for the equality
    Construct(ConstructArgs),
    /// Scan a degree interval for collisions or negative f values
    Scan(ScanArgs),
    /// Enumerate small graphs, optionally surveying the equality structure
    Enumerate(EnumerateArgs),
    /// Build a catalog family with a known verdict
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Args)]
struct ConstructArgs {
    /// Number of K_{2,5} blocks (omit with --solve)
    #[arg(long)]
    x: Option<u64>,
    /// Half-length of the degree-2 path
    #[arg(long)]
    y: u64,
    /// Part size of the K_{2,z} block
    #[arg(long)]
    z: u64,
    /// Number of K_{3,3} blocks (omit with --solve)
    #[arg(long)]
    w: Option<u64>,
    /// Solve for the (x, w) attaining the equality
    #[arg(long)]
    solve: bool,
    /// Write the graph here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    kind: ScanKind,
    /// Interval lower endpoint
    #[arg(long)]
    a: Option<u64>,
    /// Interval length (the interval is [a, a+p])
    #[arg(long)]
    p: Option<u64>,
    /// Explicit degree set for --kind fsign, e.g. 2,3,5
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<u64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ScanKind {
    Product,
    Harmonic,
    Fsign,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Exact vertex count (at most 8)
    #[arg(long)]
    n: usize,
    #[arg(long = "min-deg")]
    min_deg: Option<usize>,
    #[arg(long = "max-deg")]
    max_deg: Option<usize>,
    /// Keep only connected graphs
    #[arg(long)]
    connected: bool,
    /// One representative per isomorphism class
    #[arg(long)]
    dedup: bool,
    /// Survey the equality structure against a good interval, given as a,p
    #[arg(long = "survey-interval")]
    survey_interval: Option<String>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Family name, e.g. cycle-plus-star-b
    #[arg(long)]
    family: String,
    /// Comma-separated integer parameters, e.g. 3,5
    #[arg(long, value_delimiter = ',')]
    params: Vec<u64>,
    /// Write the graph here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError(message.into())
}

fn main() -> ExitCode {
    // die quietly when a pipe downstream closes, like cat does
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Compute(args) => cmd_compute(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Catalog(args) => cmd_catalog(args),
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<u8, CliError> {
    let text = fs::read_to_string(&args.file)
        .map_err(|e| usage(format!("{}: {e}", args.file.display())))?;
    let graphs = parse_file(&text, args.format)?;
    let many = graphs.len() > 1;
    for (idx, graph) in graphs.iter().enumerate() {
        if idx > 0 {
            println!();
        }
        let mut full = Report::new();
        if many {
            full.push("graph-index", idx);
        }
        full.extend(graph_report(graph)?);
        print!("{full}");
    }
    Ok(EXIT_OK)
}

/// Emits a constructed graph to `--out` or stdout, then its report.
fn emit_graph_and_report(
    graph: &Graph,
    head: Report,
    out: Option<&PathBuf>,
    format: GraphFormat,
) -> Result<(), CliError> {
    let payload = write_graph(graph, format);
    match out {
        Some(path) => {
            fs::write(path, payload).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => {
            print!("{payload}");
            println!();
        }
    }
    print!("{head}");
    print!("{}", graph_report(graph)?);
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, CliError> {
    let params = if args.solve {
        if args.x.is_some() || args.w.is_some() {
            return Err(usage("--solve derives x and w; do not pass them"));
        }
        let params = solve_params(args.y, args.z)?;
        println!("solved-x = {}", params.x);
        println!("solved-w = {}", params.w);
        params
    } else {
        let x = args.x.ok_or_else(|| usage("--x is required without --solve"))?;
        let w = args.w.ok_or_else(|| usage("--w is required without --solve"))?;
        FamilyParams::new(x, args.y, args.z, w)?
    };
    let graph = build_gxyzw(&params)?;

    let mut head = Report::new();
    head.push("family", "gxyzw");
    head.push("params", params);
    if params.degree_set_collides() {
        // z collides with {2,3,5}: fewer than four distinct degrees realized
        head.push("degree-set-collision", true);
    }
    emit_graph_and_report(&graph, head, args.out.as_ref(), args.format)?;

    if args.solve {
        let verdict = zagreb_core::zagreb::compare(&graph)?.verdict;
        if verdict != Verdict::Equal {
            return Ok(EXIT_SURPRISE);
        }
    }
    Ok(EXIT_OK)
}

enum Prediction {
    Empty,
    Exactly(Vec<(u64, u64, u64, u64)>),
    None,
}

fn print_collision_report(report: &CollisionReport, prediction: Prediction) -> u8 {
    for (idx, (x, y, u, v)) in report.tuples.iter().enumerate() {
        println!("tuple[{idx}] = ({x},{y},{u},{v})");
    }
    println!("count = {}", report.tuples.len());
    match prediction {
        Prediction::Empty => {
            let matches = report.tuples.is_empty();
            println!("prediction = empty");
            println!("matches-prediction = {matches}");
            if matches {
                EXIT_OK
            } else {
                EXIT_SURPRISE
            }
        }
        Prediction::Exactly(expected) => {
            let matches = report.tuples == expected;
            println!("prediction = {} specific tuple(s)", expected.len());
            println!("matches-prediction = {matches}");
            if matches {
                EXIT_OK
            } else {
                EXIT_SURPRISE
            }
        }
        Prediction::None => {
            println!("prediction = none");
            EXIT_OK
        }
    }
}

fn cmd_scan(args: ScanArgs) -> Result<u8, CliError> {
    match args.kind {
        ScanKind::Product | ScanKind::Harmonic => {
            let a = args.a.ok_or_else(|| usage("--a is required"))?;
            let p = args.p.ok_or_else(|| usage("--p is required"))?;
            if a < 1 {
                return Err(usage("--a must be at least 1"));
            }
            let threshold = good_threshold(p);
            let at_or_past_threshold = a as u128 >= threshold;
            if args.kind == ScanKind::Product {
                println!("kind = product");
                println!("interval = [{a}, {}]", a + p);
                let report = find_product_collisions(a, p);
                let prediction = if at_or_past_threshold {
                    Prediction::Empty
                } else if (a, p) == (1, 3) {
                    Prediction::Exactly(vec![(1, 4, 2, 2)])
                } else {
                    Prediction::None
                };
                Ok(print_collision_report(&report, prediction))
            } else {
                println!("kind = harmonic");
                println!("interval = [{a}, {}]", a + p);
                let report = find_harmonic_collisions(a, p);
                let prediction = if at_or_past_threshold {
                    if p % 2 == 1 && a as u128 == threshold {
                        let middle = (p * p - 1) / 2;
                        Prediction::Exactly(vec![(a, a + p, middle, middle)])
                    } else {
                        Prediction::Empty
                    }
                } else {
                    Prediction::None
                };
                Ok(print_collision_report(&report, prediction))
            }
        }
        ScanKind::Fsign => {
            let degrees: Vec<u64> = match (&args.set, args.a, args.p) {
                (Some(set), _, _) => set.clone(),
                (None, Some(a), Some(p)) => (a..=a + p).collect(),
                _ => return Err(usage("--kind fsign needs --set or both --a and --p")),
            };
            if degrees.is_empty() || degrees.iter().any(|&d| d < 1) {
                return Err(usage("degree set must be nonempty with all members >= 1"));
            }
            println!("kind = fsign");
            let mut sorted = degrees.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let joined: Vec<String> = sorted.iter().map(|d| d.to_string()).collect();
            println!("set = {}", joined.join(","));
            match scan_f_sign(&degrees) {
                Some((i, j, k, l)) => {
                    println!("witness = ({i},{j},{k},{l})");
                    let value = zagreb_core::zagreb::f(i, j, k, l).expect("degrees >= 1");
                    println!("f = {value}");
                    Ok(EXIT_SURPRISE)
                }
                None => {
                    println!("witness = none");
                    Ok(EXIT_OK)
                }
            }
        }
    }
}

fn parse_interval(text: &str) -> Result<IntervalSpec, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage("--survey-interval takes a,p"));
    }
    let a: u64 = parts[0].trim().parse().map_err(|_| usage("invalid interval endpoint"))?;
    let p: u64 = parts[1].trim().parse().map_err(|_| usage("invalid interval length"))?;
    Ok(IntervalSpec::new(a, p)?)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, CliError> {
    let interval = args.survey_interval.as_deref().map(parse_interval).transpose()?;
    let default_min = match interval {
        Some(iv) => iv.lower() as usize,
        None => 0,
    };
    let n = args.n;
    let default_max = match interval {
        Some(iv) => (iv.upper() as usize).min(n.saturating_sub(1)),
        None => n.saturating_sub(1),
    };
    let spec = EnumerationSpec {
        n,
        min_degree: args.min_deg.unwrap_or(default_min),
        max_degree: args.max_deg.unwrap_or(default_max),
        connected_only: args.connected,
        dedup: if args.dedup { Dedup::CanonicalForm } else { Dedup::None },
    };
    spec.validate()?;

    match interval {
        None => {
            // plain listing: one graph6 line per graph, in ascending mask
            // order; the count goes to stderr to keep stdout pipeable
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let mut count = 0u64;
            for g in enumerate(spec)? {
                writeln!(out, "{}", formats::write_graph6(&g)).map_err(|e| usage(e.to_string()))?;
                count += 1;
            }
            out.flush().map_err(|e| usage(e.to_string()))?;
            eprintln!("enumerated {count} graphs");
            Ok(EXIT_OK)
        }
        Some(interval) => {
            let threads = worker_threads();
            let summary = run_survey(spec, Some(interval), threads)?;
            let mut report = Report::new();
            report.push("survey-interval", interval);
            report.push("threads", threads);
            report.push("total", summary.total);
            report.push("strictly-less", summary.strictly_less);
            report.push("equal", summary.equal);
            report.push("strictly-greater", summary.strictly_greater);
            report.push("disagreements", summary.disagreements.len());
            print!("{report}");
            const LISTING_CAP: usize = 500;
            for (idx, row) in summary.equal_rows.iter().take(LISTING_CAP).enumerate() {
                println!("equal-graph[{idx}] = {}", formats::write_graph6(&row.graph()));
            }
            if summary.equal_rows.len() > LISTING_CAP {
                println!("equal-graphs-truncated = true");
            }
            for (idx, row) in summary.disagreements.iter().enumerate() {
                let structure = row
                    .structure
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| "none".into());
                println!(
                    "disagreement[{idx}] = graph6:{} verdict:{} structure:{structure}",
                    formats::write_graph6(&row.graph()),
                    row.verdict,
                );
            }
            if summary.disagreements.is_empty() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_SURPRISE)
            }
        }
    }
}

fn cmd_catalog(args: CatalogArgs) -> Result<u8, CliError> {
    let family = CatalogFamily::parse(&args.family, &args.params)?;
    let graph = family.build()?;
    let expected = family.expected_verdict();

    let mut head = Report::new();
    head.push("family", family.name());
    let joined: Vec<String> = args.params.iter().map(|p| p.to_string()).collect();
    head.push("params", joined.join(","));
    head.push("expected-verdict", expected);
    emit_graph_and_report(&graph, head, args.out.as_ref(), args.format)?;

    let actual = zagreb_core::zagreb::compare(&graph)?.verdict;
    println!("verdict-matches-expected = {}", actual == expected);
    if actual == expected {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_SURPRISE)
    }
}
