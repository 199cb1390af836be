//! Command-line front end. Results are JSON on stdout (or `--out`), progress
//! goes to stderr. Exit status: 0 clean, 1 violations found, 2 bad input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sigmaroots::families::FamilySpec;
use sigmaroots::graph::{parse_edge_list, parse_graph6, Graph};
use sigmaroots::harness::{
    classes_up_to, crosscheck, read_graph6, read_graph6_file, scan_families, scan_graph6_file, verify_brenti,
    write_graph6, write_graph6_file, ChiFilter, CrosscheckConfig, HarnessError, ScanConfig, SigmaReport,
};
use sigmaroots::sigma::SigmaMethod;

#[derive(Parser)]
#[command(
    name = "sigmaroots",
    version,
    about = "Exact σ-polynomials and real-rootedness certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// σ-polynomial, χ, real-rootedness and log-concavity of each input graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Also compare against every other applicable method.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_parser = parse_method, default_value = "clique_cover")]
        method: SigmaMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sturm certificate for σ(G, x)/x^χ of each input graph.
    Certify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a graph6 corpus.
    Scan(ScanArgs),
    /// Sweep a graph6 corpus restricted to χ ≥ n−3.
    VerifyBrenti(ScanArgs),
    /// Compare all σ methods on small and random graphs and fuzz the join identity.
    Crosscheck {
        #[arg(long, default_value_t = 6)]
        exhaustive_max_n: usize,
        #[arg(long, default_value_t = 10_000)]
        random: usize,
        #[arg(long, default_value_t = 1000)]
        join_pairs: usize,
        #[arg(long, default_value_t = 0x5167_4d41)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every member of parameterised family grids.
    Family {
        /// JSON file holding one grid or a list of grids; the standard grids
        /// are used when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one graph per isomorphism class of the given order as graph6.
    Generate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// graph6 strings.
    graphs: Vec<String>,
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    /// Plain-text edge list: the order on the first line, then `u v` pairs.
    #[arg(long)]
    edge_list: Option<PathBuf>,
    /// Stop at the first malformed line.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    graph6_file: PathBuf,
    #[arg(long)]
    max_n: Option<usize>,
    /// Chromatic condition such as `n-3`, `>=n-2` or `<=n-4`; repeatable.
    #[arg(long = "filter-chi")]
    filter_chi: Vec<ChiFilter>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    strict: bool,
    /// Cross-check every k-th selected graph; 0 disables.
    #[arg(long, default_value_t = 64)]
    agreement_every: usize,
    /// Directory for graph6 and certificate files of nonreal cases.
    #[arg(long)]
    quarantine: Option<PathBuf>,
    #[arg(long)]
    quiet: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ScanArgs {
    fn config(&self) -> ScanConfig {
        ScanConfig {
            filters: self.filter_chi.clone(),
            max_n: self.max_n,
            agreement_every: self.agreement_every,
            jobs: self.jobs,
            quarantine: self.quarantine.clone(),
            progress: !self.quiet,
            keep_reports: false,
        }
    }
}

fn parse_method(s: &str) -> Result<SigmaMethod, String> {
    serde_json::from_value(serde_json::Value::String(s.replace('-', "_"))).map_err(|_| {
        format!("unknown method {s:?}; expected brute_force, clique_cover, chromatic, recursive or matching")
    })
}

enum Failure {
    Input(String),
    Violations,
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    match out {
        Some(path) => fs::write(path, text + "\n")?,
        None => writeln!(io::stdout().lock(), "{text}")?,
    }
    Ok(())
}

fn verdict(clean: bool) -> Result<(), Failure> {
    if clean {
        Ok(())
    } else {
        Err(Failure::Violations)
    }
}

fn load_graphs(input: &GraphInput) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    for text in &input.graphs {
        graphs.push(parse_graph6(text).map_err(|e| Failure::Input(format!("{text:?}: {e}")))?);
    }
    if let Some(path) = &input.graph6_file {
        let corpus = read_graph6_file(path, input.strict)?;
        for m in &corpus.malformed {
            eprintln!("skipping line {}: {}", m.line, m.error);
        }
        graphs.extend(corpus.graphs);
    }
    if let Some(path) = &input.edge_list {
        let text = fs::read_to_string(path)?;
        graphs.push(parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?);
    }
    if graphs.is_empty() {
        let corpus = read_graph6(io::stdin().lock(), input.strict)?;
        graphs.extend(corpus.graphs);
    }
    Ok(graphs)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compute {
            input,
            cross_check,
            method,
            out,
        } => {
            let graphs = load_graphs(&input)?;
            let mut reports = Vec::with_capacity(graphs.len());
            for g in &graphs {
                let s = method
                    .compute(g)
                    .map_err(|e| Failure::Input(format!("{g}: {e}")))?;
                let cert = s.certify().map_err(|e| Failure::Input(e.to_string()))?;
                let mut r = SigmaReport::from_sigma(g, &s, &cert);
                if cross_check {
                    r.methods_agree = Some(sigmaroots::harness::methods_agree(g, &s).is_empty());
                }
                reports.push(r);
            }
            emit(&reports, out.as_deref())?;
            verdict(
                reports
                    .iter()
                    .all(|r| r.real_rooted && r.methods_agree != Some(false)),
            )
        }
        Command::Certify { input, out } => {
            let graphs = load_graphs(&input)?;
            let mut all_real = true;
            let certs: Vec<_> = graphs
                .iter()
                .map(|g| {
                    let s = sigmaroots::sigma::sigma(g);
                    let cert = s.certify().expect("σ has a positive leading coefficient");
                    all_real &= cert.verdict;
                    serde_json::json!({ "graph6": g.to_string(), "chi": s.chi(), "certificate": cert })
                })
                .collect();
            emit(&certs, out.as_deref())?;
            verdict(all_real)
        }
        Command::Scan(args) => {
            let summary = scan_graph6_file(&args.graph6_file, &args.config(), args.strict)?;
            emit(&summary, args.out.as_deref())?;
            verdict(summary.is_clean())
        }
        Command::VerifyBrenti(args) => {
            let corpus = read_graph6_file(&args.graph6_file, args.strict)?;
            let mut summary = verify_brenti(&corpus.graphs, &args.config())?;
            summary.malformed = corpus.malformed;
            emit(&summary, args.out.as_deref())?;
            verdict(summary.is_clean())
        }
        Command::Crosscheck {
            exhaustive_max_n,
            random,
            join_pairs,
            seed,
            jobs,
            out,
        } => {
            let config = CrosscheckConfig {
                exhaustive_max_n,
                random_count: random,
                join_pairs,
                seed,
                jobs,
                ..CrosscheckConfig::default()
            };
            let report = crosscheck(&config)?;
            emit(&report, out.as_deref())?;
            verdict(report.is_clean())
        }
        Command::Family { spec, jobs, out } => {
            let specs = match spec {
                Some(path) => parse_specs(&fs::read_to_string(&path)?)?,
                None => FamilySpec::standard_grids(),
            };
            let summary = scan_families(
                &specs,
                &ScanConfig {
                    jobs,
                    ..ScanConfig::default()
                },
            )?;
            emit(&summary, out.as_deref())?;
            verdict(summary.is_clean())
        }
        Command::Generate { order, out } => {
            if order > 10 {
                return Err(Failure::Input(format!(
                    "order {order} is too large to generate here"
                )));
            }
            let classes = classes_up_to(order).pop().expect("order levels");
            eprintln!("{} classes of order {order}", classes.len());
            match out {
                Some(path) => write_graph6_file(&path, &classes)?,
                None => write_graph6(io::stdout().lock(), &classes)?,
            }
            Ok(())
        }
    }
}

fn parse_specs(text: &str) -> Result<Vec<FamilySpec>, Failure> {
    let bad = |e: serde_json::Error| Failure::Input(format!("family spec: {e}"));
    if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(bad)
    } else {
        Ok(vec![serde_json::from_str(text).map_err(bad)?])
    }
}
