use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::all_labeled;
use super::scan::{in_pool, make_pool};
use super::HarnessError;
use crate::graph::{to_graph6, Graph};
use crate::sigma::{SigmaMethod, SigmaPolynomial};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrosscheckConfig {
    /// Every labelled graph up to this order is checked.
    pub exhaustive_max_n: usize,
    pub random_count: usize,
    pub random_orders: RangeInclusive<usize>,
    pub join_pairs: usize,
    /// Orders of each side of a join pair.
    pub join_orders: RangeInclusive<usize>,
    pub seed: u64,
    pub jobs: Option<usize>,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            exhaustive_max_n: 6,
            random_count: 10_000,
            random_orders: 8..=11,
            join_pairs: 1000,
            join_orders: 1..=6,
            seed: 0x5167_4d41,
            jobs: None,
        }
    }
}

/// A graph on which two computations of σ disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    /// What was compared, e.g. `"chromatic"` or `"join"`.
    pub check: String,
    pub expected: Vec<String>,
    /// `None` when the method failed outright.
    pub got: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub exhaustive_graphs: usize,
    pub random_graphs: usize,
    pub matching_checks: usize,
    pub join_pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `G(n, p)` drawn from `rng`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edge list")
}

/// Compares every σ method on all small labelled graphs and on seeded random
/// graphs, then fuzzes `σ(G ∨ H) = σ(G)σ(H)`.
pub fn crosscheck(config: &CrosscheckConfig) -> Result<CrosscheckReport, HarnessError> {
    let pool = make_pool(config.jobs);
    let mut report = CrosscheckReport::default();

    let mut exhaustive = Vec::new();
    for n in 0..=config.exhaustive_max_n {
        exhaustive.extend(all_labeled(n)?);
    }
    report.exhaustive_graphs = exhaustive.len();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let random: Vec<Graph> = (0..config.random_count)
        .map(|_| {
            let n = rng.gen_range(config.random_orders.clone());
            let p = rng.gen_range(0.05..0.95);
            random_graph(&mut rng, n, p)
        })
        .collect();
    report.random_graphs = random.len();

    let pairs: Vec<(Graph, Graph)> = (0..config.join_pairs)
        .map(|_| {
            let mut side = || {
                let n = rng.gen_range(config.join_orders.clone());
                let p = rng.gen_range(0.0..1.0);
                random_graph(&mut rng, n, p)
            };
            (side(), side())
        })
        .collect();
    report.join_pairs = pairs.len();

    let (methods, joins) = in_pool(&pool, || {
        let methods: Vec<(bool, Vec<Mismatch>)> = exhaustive
            .par_iter()
            .chain(random.par_iter())
            .map(compare_methods)
            .collect();
        let joins: Vec<Mismatch> = pairs.par_iter().filter_map(|(g, h)| check_join(g, h)).collect();
        (methods, joins)
    });
    for (matched, bad) in methods {
        report.matching_checks += matched as usize;
        report.mismatches.extend(bad);
    }
    report.mismatches.extend(joins);
    Ok(report)
}

fn coeffs(s: &SigmaPolynomial) -> Vec<String> {
    s.to_decimal_strings()
}

fn method_name(m: SigmaMethod) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Returns whether the matching route applied, and any disagreements with the
/// clique-cover result.
fn compare_methods(g: &Graph) -> (bool, Vec<Mismatch>) {
    let reference = SigmaMethod::CliqueCover
        .compute(g)
        .expect("clique cover is total");
    let mut bad = Vec::new();
    let mut matched = false;
    for method in [
        SigmaMethod::BruteForce,
        SigmaMethod::Chromatic,
        SigmaMethod::Recursive,
        SigmaMethod::Matching,
    ] {
        let got = match method.compute(g) {
            Ok(s) => {
                matched |= method == SigmaMethod::Matching;
                s
            }
            Err(crate::sigma::SigmaError::ComplementHasTriangle) if method == SigmaMethod::Matching => {
                continue
            }
            Err(_) => {
                bad.push(Mismatch {
                    graph6: to_graph6(g),
                    check: method_name(method),
                    expected: coeffs(&reference),
                    got: None,
                });
                continue;
            }
        };
        if got != reference {
            bad.push(Mismatch {
                graph6: to_graph6(g),
                check: method_name(method),
                expected: coeffs(&reference),
                got: Some(coeffs(&got)),
            });
        }
    }
    (matched, bad)
}

fn check_join(g: &Graph, h: &Graph) -> Option<Mismatch> {
    let joined = g.join(h).expect("orders are small");
    let product = SigmaPolynomial::from_coefficients(
        (SigmaMethod::CliqueCover.compute(g).ok()?.poly() * SigmaMethod::CliqueCover.compute(h).ok()?.poly())
            .into_coeffs(),
    );
    let direct = SigmaMethod::Recursive.compute(&joined).ok()?;
    (direct != product).then(|| Mismatch {
        graph6: to_graph6(&joined),
        check: "join".to_string(),
        expected: coeffs(&product),
        got: Some(coeffs(&direct)),
    })
}
