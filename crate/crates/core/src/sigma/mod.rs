//! σ-polynomials by several independent exact methods, plus the matching
//! polynomial and clique-packing counts.

mod bruteforce;
mod chromatic;
mod cliquecover;
mod matching;
mod recursive;
mod shapes;

pub use bruteforce::{sigma_bruteforce, BRUTE_FORCE_MAX_ORDER};
pub use chromatic::{
    chromatic_polynomial, chromatic_polynomial_with_budget, sigma_from_chromatic, DEFAULT_CHROMATIC_BUDGET,
};
pub use cliquecover::sigma_cliquecover;
pub use matching::{matching_polynomial, sigma_via_matching};
pub use recursive::sigma_recursive;
pub use shapes::{eta_count, forbidden_shapes, CliqueMultiset};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::poly::{IntPoly, RatPoly};
use crate::realroots::{is_real_rooted, RealRootCertificate, RootError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigmaError {
    #[error("order {n} exceeds the brute-force limit of {max}")]
    TooLargeForBruteForce { n: usize, max: usize },
    #[error("deletion-contraction budget of {0} steps exhausted")]
    BudgetExceeded(u64),
    #[error("clique orders must be at least 2, got {0}")]
    BadShape(usize),
    #[error("complement contains a triangle")]
    ComplementHasTriangle,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `σ(G, x) = Σ a_i x^i`, with `a_i` the number of partitions of the vertex
/// set into `i` nonempty independent sets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaPolynomial {
    poly: IntPoly,
    n: usize,
}

impl SigmaPolynomial {
    /// Wraps coefficients `a_0..=a_n`.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        let poly = IntPoly::new(coeffs);
        let n = poly.degree().unwrap_or(0);
        debug_assert!(poly.leading().is_some_and(One::is_one));
        SigmaPolynomial { poly, n }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn coefficients(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.poly.coeff(i)
    }

    /// Order of the graph, which is also the degree.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Lowest index with a nonzero coefficient, which is the chromatic number.
    pub fn chi(&self) -> usize {
        self.poly.low_order()
    }

    pub fn to_rational(&self) -> RatPoly {
        self.poly.to_rational()
    }

    /// `σ / x^χ`, which has the same nonzero roots and a nonzero constant term.
    pub fn reduced(&self) -> IntPoly {
        IntPoly::new(self.poly.coeffs()[self.chi()..].to_vec())
    }

    /// Sturm certificate of `σ / x^χ`. Dividing out the root at zero keeps the
    /// chain short and does not change the verdict.
    pub fn certify(&self) -> Result<RealRootCertificate, RootError> {
        is_real_rooted(&self.reduced().to_rational())
    }

    /// Coefficients as decimal strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        crate::poly::decimal::to_strings(self.poly.coeffs())
    }
}

impl fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ[{}]", self.poly)
    }
}

/// The available σ algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaMethod {
    BruteForce,
    CliqueCover,
    Chromatic,
    Recursive,
    Matching,
}

impl SigmaMethod {
    /// The four general methods; matching only applies to some graphs.
    pub const GENERAL: [SigmaMethod; 4] = [
        SigmaMethod::BruteForce,
        SigmaMethod::CliqueCover,
        SigmaMethod::Chromatic,
        SigmaMethod::Recursive,
    ];

    pub fn compute(self, g: &Graph) -> Result<SigmaPolynomial, SigmaError> {
        match self {
            SigmaMethod::BruteForce => sigma_bruteforce(g),
            SigmaMethod::CliqueCover => Ok(sigma_cliquecover(g)),
            SigmaMethod::Chromatic => sigma_from_chromatic(g),
            SigmaMethod::Recursive => Ok(sigma_recursive(g)),
            SigmaMethod::Matching => sigma_via_matching(g),
        }
    }
}

/// σ by the default method.
pub fn sigma(g: &Graph) -> SigmaPolynomial {
    sigma_cliquecover(g)
}

/// `x^n`, the σ-polynomial of `K_n`.
pub(crate) fn x_pow(n: usize) -> SigmaPolynomial {
    SigmaPolynomial {
        poly: IntPoly::monomial(BigInt::one(), n),
        n,
    }
}

pub(crate) fn from_counts<T: Into<BigInt>>(counts: Vec<T>) -> SigmaPolynomial {
    let coeffs: Vec<BigInt> = counts.into_iter().map(Into::into).collect();
    debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
    SigmaPolynomial::from_coefficients(coeffs)
}
