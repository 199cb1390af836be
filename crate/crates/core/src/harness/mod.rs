//! Corpus handling, exhaustive enumeration, sweeps and cross-method audits.

mod corpus;
mod crosscheck;
mod enumerate;
mod report;
mod scan;

pub use corpus::{read_graph6, read_graph6_file, write_graph6, write_graph6_file, Corpus, MalformedLine};
pub use crosscheck::{crosscheck, random_graph, CrosscheckConfig, CrosscheckReport, Mismatch};
pub use enumerate::{
    all_labeled, classes_up_to, enumerate_small, extend_classes, labeled_graph, ENUMERATE_MAX_ORDER,
};
pub use report::{methods_agree, SigmaReport};
pub use scan::{
    scan, scan_families, scan_graph6_file, verify_brenti, ChiFilter, FamilyScanSummary, ScanConfig,
    ScanSummary,
};

use thiserror::Error;

use crate::families::FamilyError;
use crate::sigma::SigmaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("internal enumeration is limited to order 7, got {0}")]
    TooLargeForEnumeration(usize),
    #[error("line {line}: malformed graph6 {text:?}: {message}")]
    Malformed {
        line: usize,
        text: String,
        message: String,
    },
    #[error("bad chromatic filter {0:?}; expected n-k, >=n-k or <=n-k")]
    BadFilter(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Sigma(#[from] SigmaError),
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        HarnessError::Json(e.to_string())
    }
}
