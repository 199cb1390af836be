//! Exact real-rootedness: Sturm chains, root isolation, interleaving and
//! compatibility. All arithmetic is over the rationals.

mod interleave;
mod isolate;
mod sturm;

use thiserror::Error;

use crate::poly::PolyError;

pub use interleave::{
    are_compatible, avoids_roots_of, common_interleaver_exists, compatible_combo_probe, interleaves,
    signs_at_roots,
};
pub use isolate::{
    cauchy_bound, isolate_roots, squarefree_decomposition, squarefree_part, RootInterval, RootProfile,
};
pub use sturm::{
    certificate_from_chain, count_roots_in, is_real_rooted, RealRootCertificate, SturmChain, Witness,
    WitnessKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial has no Sturm chain")]
    Constant,
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("interval must satisfy a < b")]
    InvalidInterval,
    #[error("interval endpoint is a root")]
    EndpointIsRoot,
    #[error("polynomial is not square-free")]
    NotSquarefree,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("scalar must be positive")]
    NonPositiveScalar,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
