use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::RootError;
use crate::poly::{RatPoly, Rational};

/// `f, f', -rem(f, f'), …` terminated at the last nonzero member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    members: Vec<RatPoly>,
}

impl SturmChain {
    /// Chain with every member rescaled to coprime integer coefficients by a
    /// positive factor, which leaves all signs and degrees intact.
    pub fn new(f: &RatPoly) -> Result<Self, RootError> {
        Self::build(f, true)
    }

    /// The textbook chain with no rescaling.
    pub fn unnormalized(f: &RatPoly) -> Result<Self, RootError> {
        Self::build(f, false)
    }

    fn build(f: &RatPoly, normalize: bool) -> Result<Self, RootError> {
        match f.degree() {
            None => return Err(RootError::ZeroPolynomial),
            Some(0) => return Err(RootError::Constant),
            Some(_) => {}
        }
        let tidy = |p: RatPoly| if normalize { p.primitive() } else { p };
        let mut members = vec![tidy(f.clone()), tidy(f.derivative())];
        loop {
            let k = members.len();
            let r = members[k - 2].rem(&members[k - 1])?;
            if r.is_zero() {
                break;
            }
            members.push(tidy(-&r));
        }
        Ok(SturmChain { members })
    }

    pub fn members(&self) -> &[RatPoly] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.members
            .iter()
            .map(|m| m.degree().expect("nonzero member"))
            .collect()
    }

    pub fn leading_coefficients(&self) -> Vec<Rational> {
        self.members
            .iter()
            .map(|m| m.leading().expect("nonzero member").clone())
            .collect()
    }

    pub fn leading_signs(&self) -> Vec<i8> {
        self.members
            .iter()
            .map(|m| {
                if m.leading().expect("nonzero").is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        count_variations(self.members.iter().map(|m| m.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive_end: bool) -> usize {
        count_variations(self.members.iter().map(|m| m.sign_at_infinity(positive_end)))
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    DegreeGap,
    NegativeLeading,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index into the chain of the offending member.
    pub index: usize,
    pub kind: WitnessKind,
}

/// Outcome of the Sturm real-rootedness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootCertificate {
    pub verdict: bool,
    pub degrees: Vec<usize>,
    pub leading_signs: Vec<i8>,
    pub witness: Option<Witness>,
}

/// All roots real iff the Sturm chain has no degree gaps and no negative
/// leading coefficient. Constants (and zero) are vacuously real-rooted.
///
/// Repeated roots end the chain early at a multiple of `gcd(f, f')`; with
/// unit degree steps the sign count still equals the number of distinct
/// roots, so the same criterion applies unchanged.
pub fn is_real_rooted(f: &RatPoly) -> Result<RealRootCertificate, RootError> {
    match f.degree() {
        None => {
            return Ok(RealRootCertificate {
                verdict: true,
                degrees: vec![],
                leading_signs: vec![],
                witness: None,
            })
        }
        Some(0) => {
            let sign = if f.coeffs()[0].is_positive() { 1 } else { -1 };
            return Ok(RealRootCertificate {
                verdict: true,
                degrees: vec![0],
                leading_signs: vec![sign],
                witness: None,
            });
        }
        Some(_) => {}
    }
    if !f.leading().expect("nonzero").is_positive() {
        return Err(RootError::NonPositiveLeading);
    }
    let chain = SturmChain::new(f)?;
    Ok(certificate_from_chain(&chain))
}

pub fn certificate_from_chain(chain: &SturmChain) -> RealRootCertificate {
    let degrees = chain.degrees();
    let leading_signs = chain.leading_signs();
    let mut witness = None;
    for j in 1..degrees.len() {
        if degrees[j] + 1 < degrees[j - 1] {
            witness = Some(Witness {
                index: j,
                kind: WitnessKind::DegreeGap,
            });
            break;
        }
        if leading_signs[j] < 0 {
            witness = Some(Witness {
                index: j,
                kind: WitnessKind::NegativeLeading,
            });
            break;
        }
    }
    RealRootCertificate {
        verdict: witness.is_none(),
        degrees,
        leading_signs,
        witness,
    }
}

/// Distinct real roots of a square-free `f` in `(a, b)`.
pub fn count_roots_in(f: &RatPoly, a: &Rational, b: &Rational) -> Result<usize, RootError> {
    if a >= b {
        return Err(RootError::InvalidInterval);
    }
    if f.evaluate(a).is_zero() || f.evaluate(b).is_zero() {
        return Err(RootError::EndpointIsRoot);
    }
    if f.degree() == Some(0) {
        return Ok(0);
    }
    if f.gcd(&f.derivative())?.degree() != Some(0) {
        return Err(RootError::NotSquarefree);
    }
    let chain = SturmChain::new(f)?;
    Ok(chain.variations_at(a) - chain.variations_at(b))
}
