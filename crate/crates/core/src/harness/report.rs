use serde::{Deserialize, Serialize};

use crate::graph::{to_graph6, Graph};
use crate::poly::is_log_concave;
use crate::realroots::RealRootCertificate;
use crate::sigma::{sigma, SigmaMethod, SigmaPolynomial};

/// Everything computed for one graph, as emitted by the scans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub chi: usize,
    /// Decimal coefficients, constant term first.
    pub sigma_coeffs: Vec<String>,
    /// `None` when no cross-method check was run.
    pub methods_agree: Option<bool>,
    pub real_rooted: bool,
    pub log_concave: bool,
}

impl SigmaReport {
    pub fn from_sigma(g: &Graph, s: &SigmaPolynomial, cert: &RealRootCertificate) -> Self {
        SigmaReport {
            graph6: to_graph6(g),
            n: g.order(),
            edges: g.edge_count(),
            chi: s.chi(),
            sigma_coeffs: s.to_decimal_strings(),
            methods_agree: None,
            real_rooted: cert.verdict,
            log_concave: is_log_concave(s.coefficients()).holds,
        }
    }

    /// σ by the default method, certified, optionally cross-checked against
    /// every other applicable method.
    pub fn compute(g: &Graph, cross_check: bool) -> Self {
        let s = sigma(g);
        let cert = s.certify().expect("σ has a positive leading coefficient");
        let mut report = Self::from_sigma(g, &s, &cert);
        if cross_check {
            report.methods_agree = Some(methods_agree(g, &s).is_empty());
        }
        report
    }
}

/// Methods whose σ differs from `reference`. Methods that do not apply to
/// `g` (brute force above its order limit, matching with a triangle in the
/// complement) are skipped.
pub fn methods_agree(g: &Graph, reference: &SigmaPolynomial) -> Vec<(SigmaMethod, Option<SigmaPolynomial>)> {
    let mut bad = Vec::new();
    for method in [
        SigmaMethod::BruteForce,
        SigmaMethod::Chromatic,
        SigmaMethod::Recursive,
        SigmaMethod::Matching,
    ] {
        match method.compute(g) {
            Ok(s) if &s == reference => {}
            Ok(s) => bad.push((method, Some(s))),
            Err(crate::sigma::SigmaError::TooLargeForBruteForce { .. })
            | Err(crate::sigma::SigmaError::ComplementHasTriangle) => {}
            Err(_) => bad.push((method, None)),
        }
    }
    bad
}
