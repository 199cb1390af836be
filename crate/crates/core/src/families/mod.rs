//! Parameterised graph families with known σ-polynomials, and the checks
//! on their root structure.

mod fseries;
mod grid;
mod pointcover;

pub use fseries::{f45_construction, f_family_cubic, f_family_sigma, join_with_clique};
pub use grid::{FamilyMember, FamilySpec, Span};
pub use pointcover::{
    is_proper_k_star, pointcover_complement, quadratic_compatibility_check, root_chain_check,
    sigma_pointcover_formula, AlphaBeta, PointCoverParams, RootChainReport,
};

use thiserror::Error;

use crate::graph::GraphError;
use crate::realroots::RootError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family member would have order {0}, above 64")]
    TooLarge(usize),
    #[error("the closed form needs j >= 1 and k >= 1")]
    EmptyJOrK,
    #[error("alpha and beta must both be at least 1")]
    DegenerateAlphaBeta,
    #[error("unknown variant {0}")]
    UnknownVariant(u8),
    #[error("independent checks disagree: {0}")]
    RouteDisagreement(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
