//! Command-line interface: certification, pipeline runs, post-processing,
//! instance generation, exact MaxCut and catalog dumps, all reporting JSON.
//!
//! Exit codes: 0 success, 1 domain failure (failed certificate, violated
//! precondition), 2 usage error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::certify::{self, Method};
use crate::cut::{cutsize, good_triplets, max_cut_exact, unsat_sets, Cut};
use crate::graph::{
    edge_catalog, random_three_regular, star_catalog, triplet_catalog, EnvKind, Graph,
};
use crate::optimize::twisted_qaoa_run;
use crate::postprocess::{fkl_traced, hlz_traced, PostMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twisted-maxcut",
    about = "Twisted QAOA for MaxCut on 3-regular graphs: simulate, post-process, certify",
    version
)]
pub struct Cli {
    /// Cap the internal thread pool.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce certified approximation-ratio bounds from witness angles.
    Certify(CertifyArgs),
    /// Optimize, sample and post-process on a concrete graph.
    Run(RunArgs),
    /// Apply FKL or HLZ post-processing to a given cut.
    Postprocess(PostprocessArgs),
    /// Generate a random 3-regular graph in edge-list format.
    Gen(GenArgs),
    /// Exact MaxCut of an edge-list graph.
    Maxcut(MaxcutArgs),
    /// Dump the 1-environment catalogs as edge lists.
    Envs(EnvsArgs),
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// bare, fkl or hlz.
    #[arg(long)]
    pub method: Option<Method>,
    /// QAOA level, 1 to 6.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub p: Option<u8>,
    /// Certify the whole 3 x 6 table.
    #[arg(long, conflicts_with_all = ["method", "p"])]
    pub all: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Edge-list graph file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6), default_value = "1")]
    pub p: u8,
    /// none, fkl or hlz.
    #[arg(long, default_value = "none")]
    pub post: PostMethod,
    #[arg(long, default_value = "1000")]
    pub shots: usize,
    #[arg(long, default_value = "0")]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PostprocessArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Cut as a 0/1 string, vertex 0 leftmost.
    #[arg(long)]
    pub cut: String,
    /// fkl or hlz.
    #[arg(long)]
    pub method: PostMethod,
    /// Print one line per flip.
    #[arg(long)]
    pub trace: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "0")]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MaxcutArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnvsArgs {
    /// edge, triplet or star.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cmd: Command) -> crate::Result<i32> {
    match cmd {
        Command::Certify(args) => cmd_certify(args),
        Command::Run(args) => cmd_run(args),
        Command::Postprocess(args) => cmd_postprocess(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Maxcut(args) => cmd_maxcut(args),
        Command::Envs(args) => cmd_envs(args),
    }
}

fn emit<T: Serialize>(value: &T, out: &Option<PathBuf>) -> crate::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_certify(args: CertifyArgs) -> crate::Result<i32> {
    if args.all {
        let reports = certify::certify_all()?;
        let pass = reports.iter().all(|r| r.pass);
        let document = json!({
            "schema": certify::SCHEMA_VERSION,
            "pass": pass,
            "reports": reports,
        });
        emit(&document, &args.out)?;
        return Ok(if pass { EXIT_OK } else { EXIT_FAILURE });
    }
    match (args.method, args.p) {
        (Some(method), Some(p)) => {
            let report = certify::certify(method, p as usize)?;
            let pass = report.pass;
            emit(&report, &args.out)?;
            Ok(if pass { EXIT_OK } else { EXIT_FAILURE })
        }
        _ => {
            eprintln!("error: pass either --all or both --method and --p");
            Ok(EXIT_USAGE)
        }
    }
}

fn load_graph(path: &PathBuf) -> crate::Result<Graph> {
    Graph::from_edge_list_text(&fs::read_to_string(path)?)
}

fn cmd_run(args: RunArgs) -> crate::Result<i32> {
    if args.shots == 0 {
        eprintln!("error: --shots must be at least 1");
        return Ok(EXIT_USAGE);
    }
    let g = load_graph(&args.graph)?;
    let record = twisted_qaoa_run(&g, args.p as usize, args.post, args.shots, args.seed)?;
    let report = json!({
        "schema": certify::SCHEMA_VERSION,
        "post": record.post.as_str(),
        "p": record.p,
        "beta": rounded(&record.beta),
        "gamma": rounded(&record.gamma),
        "optimized_value": record.optimized_value,
        "best_cut": record.best_cut,
        "best_cutsize": record.best_cutsize,
        "max_cut": record.max_cut,
        "mean_ratio": record.mean_ratio,
    });
    emit(&report, &args.out)?;
    Ok(EXIT_OK)
}

/// Angles are canonicalized to [0, 2pi) and printed with six decimals only
/// here, at the serialization boundary.
fn rounded(xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|x| (x.rem_euclid(std::f64::consts::TAU) * 1e6).round() / 1e6)
        .collect()
}

fn cmd_postprocess(args: PostprocessArgs) -> crate::Result<i32> {
    let g = load_graph(&args.graph)?;
    let cut = match Cut::parse(&args.cut) {
        Ok(c) if c.len() == g.n() => c,
        Ok(c) => {
            eprintln!(
                "error: cut has {} bits but the graph has {} vertices",
                c.len(),
                g.n()
            );
            return Ok(EXIT_USAGE);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    let before = cutsize(&g, &cut)?;
    let (outcome, guaranteed) = match args.method {
        PostMethod::Fkl => {
            let good = good_triplets(&g, &cut)?.len();
            (fkl_traced(&g, &cut)?, good as f64 / 3.0)
        }
        PostMethod::Hlz => {
            let (v2, v3) = unsat_sets(&g, &cut)?;
            (
                hlz_traced(&g, &cut)?,
                0.4 * v2.len() as f64 + 17.0 / 15.0 * v3.len() as f64,
            )
        }
        PostMethod::None => {
            eprintln!("error: --method must be fkl or hlz");
            return Ok(EXIT_USAGE);
        }
    };
    let after = cutsize(&g, &outcome.cut)?;
    if args.trace {
        for rec in &outcome.trace {
            let verts: Vec<String> = rec.vertices.iter().map(|v| v.to_string()).collect();
            eprintln!(
                "flip {{{}}} cutsize {} -> {}",
                verts.join(" "),
                rec.before,
                rec.after
            );
        }
    }
    let report = json!({
        "schema": certify::SCHEMA_VERSION,
        "method": args.method.as_str(),
        "before": before,
        "after": after,
        "gain": after as i64 - before as i64,
        "guaranteed_gain": guaranteed,
        "cut": outcome.cut.to_string(),
        "flips": outcome.trace.len(),
    });
    emit(&report, &args.out)?;
    Ok(EXIT_OK)
}

fn cmd_gen(args: GenArgs) -> crate::Result<i32> {
    let g = random_three_regular(args.n, args.seed)?;
    let text = g.to_edge_list_text();
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_maxcut(args: MaxcutArgs) -> crate::Result<i32> {
    let g = load_graph(&args.graph)?;
    let (size, witness) = max_cut_exact(&g)?;
    let report = json!({
        "schema": certify::SCHEMA_VERSION,
        "n": g.n(),
        "edges": g.edge_count(),
        "max_cut": size,
        "cut": witness.to_string(),
    });
    emit(&report, &args.out)?;
    Ok(EXIT_OK)
}

fn cmd_envs(args: EnvsArgs) -> crate::Result<i32> {
    let catalog = match args.kind.as_str() {
        "edge" => edge_catalog(),
        "triplet" => triplet_catalog(),
        "star" => star_catalog(),
        other => {
            eprintln!("error: unknown catalog kind {other:?} (edge, triplet, star)");
            return Ok(EXIT_USAGE);
        }
    };
    let kind = match catalog.kind {
        EnvKind::Edge => "edge",
        EnvKind::Triplet => "triplet",
        EnvKind::Star => "star",
    };
    let mut text = String::new();
    for entry in &catalog.entries {
        text.push_str(&format!("# {} {}\n", kind, entry.name));
        text.push_str(&entry.env.to_edge_list_text());
        text.push('\n');
    }
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}
