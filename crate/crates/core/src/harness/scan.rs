use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{methods_agree, read_graph6_file, HarnessError, MalformedLine, SigmaReport};
use crate::families::{FamilyMember, FamilySpec};
use crate::graph::{chromatic_number, Graph};
use crate::poly::{is_log_concave, IntPoly};
use crate::realroots::is_real_rooted;
use crate::sigma::sigma;

/// A condition on `χ(G)` relative to the order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiFilter {
    /// `χ ≥ n − k`
    AtLeast(usize),
    /// `χ = n − k`
    Exactly(usize),
    /// `χ ≤ n − k`
    AtMost(usize),
}

impl ChiFilter {
    pub fn accepts(&self, n: usize, chi: usize) -> bool {
        let chi = chi as i64;
        let target = |k: usize| n as i64 - k as i64;
        match *self {
            ChiFilter::AtLeast(k) => chi >= target(k),
            ChiFilter::Exactly(k) => chi == target(k),
            ChiFilter::AtMost(k) => chi <= target(k),
        }
    }
}

impl FromStr for ChiFilter {
    type Err = HarnessError;

    /// `n-3` or `=n-3`, `>=n-2`, `<=n-4`; `n` alone means `k = 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::BadFilter(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (make, rest): (fn(usize) -> ChiFilter, &str) = if let Some(r) = t.strip_prefix(">=") {
            (ChiFilter::AtLeast, r)
        } else if let Some(r) = t.strip_prefix("<=") {
            (ChiFilter::AtMost, r)
        } else {
            (ChiFilter::Exactly, t.strip_prefix('=').unwrap_or(&t))
        };
        let rest = rest.strip_prefix('n').ok_or_else(bad)?;
        let k = if rest.is_empty() {
            0
        } else {
            rest.strip_prefix('-')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?
        };
        Ok(make(k))
    }
}

impl fmt::Display for ChiFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ChiFilter::AtLeast(k) => write!(f, ">=n-{k}"),
            ChiFilter::Exactly(k) => write!(f, "=n-{k}"),
            ChiFilter::AtMost(k) => write!(f, "<=n-{k}"),
        }
    }
}

impl Serialize for ChiFilter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Largest order at which the spot checks run the slower σ methods; above
/// it only the matching route is compared.
pub const CROSS_CHECK_MAX_ORDER: usize = 14;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    /// All must hold.
    pub filters: Vec<ChiFilter>,
    pub max_n: Option<usize>,
    /// Cross-check σ by the other methods on every `k`-th graph; 0 disables.
    pub agreement_every: usize,
    pub jobs: Option<usize>,
    /// Directory receiving graph6 and certificate files for each graph with
    /// a nonreal root.
    pub quarantine: Option<PathBuf>,
    pub progress: bool,
    /// Keep the per-graph reports of selected graphs in the summary.
    pub keep_reports: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            filters: Vec::new(),
            max_n: None,
            agreement_every: 64,
            jobs: None,
            quarantine: None,
            progress: false,
            keep_reports: false,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FilterCount {
    pub filter: String,
    pub passed: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    /// Graphs within `max_n`.
    pub in_range: usize,
    pub filter_counts: Vec<FilterCount>,
    /// Graphs passing every filter; these are the ones σ is computed for.
    pub selected: usize,
    pub nonreal_count: usize,
    pub nonreal: Vec<String>,
    /// Real-rooted σ whose coefficients are not log-concave.
    pub newton_violation_count: usize,
    pub newton_violations: Vec<String>,
    pub method_checks: usize,
    pub method_disagreement_count: usize,
    pub method_disagreements: Vec<String>,
    pub malformed: Vec<MalformedLine>,
    pub elapsed_secs: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<SigmaReport>,
}

impl ScanSummary {
    /// No nonreal roots, Newton violations or method disagreements.
    pub fn is_clean(&self) -> bool {
        self.nonreal.is_empty() && self.newton_violations.is_empty() && self.method_disagreements.is_empty()
    }
}

struct Outcome {
    in_range: bool,
    passes: Vec<bool>,
    report: Option<SigmaReport>,
    checked: bool,
    disagreement: bool,
}

fn examine(g: &Graph, index: usize, config: &ScanConfig) -> Outcome {
    let n = g.order();
    let mut out = Outcome {
        in_range: false,
        passes: Vec::new(),
        report: None,
        checked: false,
        disagreement: false,
    };
    if config.max_n.is_some_and(|m| n > m) {
        return out;
    }
    out.in_range = true;
    let chi = (!config.filters.is_empty()).then(|| chromatic_number(g));
    if let Some(chi) = chi {
        out.passes = config.filters.iter().map(|f| f.accepts(n, chi)).collect();
        if !out.passes.iter().all(|&p| p) {
            return out;
        }
    }
    let s = sigma(g);
    let cert = s.certify().expect("σ has a positive leading coefficient");
    let mut report = SigmaReport::from_sigma(g, &s, &cert);
    if chi.is_some_and(|c| c != s.chi()) {
        out.disagreement = true;
    }
    if config.agreement_every > 0 && index.is_multiple_of(config.agreement_every) {
        out.checked = true;
        let bad = if n <= CROSS_CHECK_MAX_ORDER {
            methods_agree(g, &s)
        } else {
            let matching = crate::sigma::SigmaMethod::Matching;
            match matching.compute(g) {
                Ok(m) if m != s => vec![(matching, Some(m))],
                _ => Vec::new(),
            }
        };
        report.methods_agree = Some(bad.is_empty());
        out.disagreement |= !bad.is_empty();
    }
    out.report = Some(report);
    out
}

pub(crate) fn make_pool(jobs: Option<usize>) -> Option<rayon::ThreadPool> {
    jobs.map(|j| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
    })
}

pub(crate) fn in_pool<T: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

const BATCH: usize = 8192;

/// σ, certificate and log-concavity for every graph passing the filters.
/// Results are merged in input order, so the summary does not depend on the
/// number of threads.
pub fn scan(graphs: &[Graph], config: &ScanConfig) -> Result<ScanSummary, HarnessError> {
    let start = Instant::now();
    let mut summary = ScanSummary {
        total: graphs.len(),
        filter_counts: config
            .filters
            .iter()
            .map(|f| FilterCount {
                filter: f.to_string(),
                passed: 0,
            })
            .collect(),
        ..ScanSummary::default()
    };
    let pool = make_pool(config.jobs);
    let mut nonreal_reports = Vec::new();
    for (b, chunk) in graphs.chunks(BATCH).enumerate() {
        let base = b * BATCH;
        let outcomes: Vec<Outcome> = in_pool(&pool, || {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, g)| examine(g, base + i, config))
                .collect()
        });
        for o in outcomes {
            summary.in_range += usize::from(o.in_range);
            for (fc, &p) in summary.filter_counts.iter_mut().zip(&o.passes) {
                fc.passed += usize::from(p);
            }
            let Some(report) = o.report else { continue };
            summary.selected += 1;
            summary.method_checks += usize::from(o.checked);
            if o.disagreement {
                summary.method_disagreements.push(report.graph6.clone());
            }
            if !report.real_rooted {
                summary.nonreal.push(report.graph6.clone());
                nonreal_reports.push(report.clone());
            } else if !report.log_concave {
                summary.newton_violations.push(report.graph6.clone());
            }
            if config.keep_reports {
                summary.reports.push(report);
            }
        }
        if config.progress {
            eprintln!(
                "scanned {}/{} graphs",
                (base + chunk.len()).min(graphs.len()),
                graphs.len()
            );
        }
    }
    if let Some(dir) = &config.quarantine {
        quarantine(dir, &nonreal_reports)?;
    }
    summary.nonreal_count = summary.nonreal.len();
    summary.newton_violation_count = summary.newton_violations.len();
    summary.method_disagreement_count = summary.method_disagreements.len();
    summary.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(summary)
}

fn quarantine(dir: &Path, reports: &[SigmaReport]) -> Result<(), HarnessError> {
    if reports.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    for (i, r) in reports.iter().enumerate() {
        let coeffs = crate::poly::decimal::from_strings(&r.sigma_coeffs).expect("own output");
        let reduced = IntPoly::new(coeffs[r.chi..].to_vec());
        let cert = is_real_rooted(&reduced.to_rational()).expect("positive leading coefficient");
        let stem = dir.join(format!("nonreal-{i:05}"));
        fs::write(stem.with_extension("g6"), format!("{}\n", r.graph6))?;
        let body = serde_json::json!({ "report": r, "certificate_of_sigma_over_x_chi": cert });
        fs::write(stem.with_extension("json"), serde_json::to_string_pretty(&body)?)?;
    }
    Ok(())
}

/// Reads a graph6 file and scans it. Malformed lines abort in strict mode
/// and are listed in the summary otherwise.
pub fn scan_graph6_file(path: &Path, config: &ScanConfig, strict: bool) -> Result<ScanSummary, HarnessError> {
    let corpus = read_graph6_file(path, strict)?;
    let mut summary = scan(&corpus.graphs, config)?;
    summary.malformed = corpus.malformed;
    Ok(summary)
}

/// Scan restricted to `χ ≥ n − 3`, where every σ should be real-rooted.
pub fn verify_brenti(graphs: &[Graph], config: &ScanConfig) -> Result<ScanSummary, HarnessError> {
    let mut config = config.clone();
    config.filters.push(ChiFilter::AtLeast(3));
    scan(graphs, &config)
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FamilyScanSummary {
    pub members: usize,
    pub graphs: usize,
    pub closed_forms: usize,
    /// Graph members with `χ = n − 3`.
    pub chi_n_minus_3: usize,
    pub nonreal: Vec<String>,
    pub newton_violations: Vec<String>,
    pub method_disagreements: Vec<String>,
    pub elapsed_secs: f64,
}

impl FamilyScanSummary {
    pub fn is_clean(&self) -> bool {
        self.nonreal.is_empty() && self.newton_violations.is_empty() && self.method_disagreements.is_empty()
    }
}

/// Certifies every member of every grid: graphs through the same path as
/// [`scan`], closed forms directly.
pub fn scan_families(specs: &[FamilySpec], config: &ScanConfig) -> Result<FamilyScanSummary, HarnessError> {
    let start = Instant::now();
    let mut members = Vec::new();
    for spec in specs {
        members.extend(spec.members()?);
    }
    let mut summary = FamilyScanSummary {
        members: members.len(),
        ..FamilyScanSummary::default()
    };
    let mut unfiltered = config.clone();
    unfiltered.filters.clear();
    unfiltered.max_n = None;
    let config = &unfiltered;
    let per_member = |(i, m): (usize, &FamilyMember)| match m {
        FamilyMember::Graph { graph, .. } => {
            let o = examine(graph, i, config);
            let r = o.report.expect("no filters");
            (
                true,
                r.chi + 3 == r.n,
                r.real_rooted,
                r.log_concave,
                o.disagreement,
            )
        }
        FamilyMember::ClosedForm { sigma, .. } => {
            let reduced = IntPoly::new(sigma.coeffs()[sigma.low_order()..].to_vec());
            let real = is_real_rooted(&reduced.to_rational())
                .expect("positive leading coefficient")
                .verdict;
            (false, false, real, is_log_concave(sigma.coeffs()).holds, false)
        }
    };
    let results: Vec<_> = in_pool(&make_pool(config.jobs), || {
        members.par_iter().enumerate().map(per_member).collect()
    });
    for (m, (is_graph, chi3, real, lc, disagree)) in members.iter().zip(results) {
        let label = m.label().to_string();
        if is_graph {
            summary.graphs += 1;
        } else {
            summary.closed_forms += 1;
        }
        summary.chi_n_minus_3 += usize::from(chi3);
        if !real {
            summary.nonreal.push(label.clone());
        } else if !lc {
            summary.newton_violations.push(label.clone());
        }
        if disagree {
            summary.method_disagreements.push(label);
        }
    }
    summary.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(summary)
}
