use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::sturm::SturmChain;
use super::RootError;
use crate::poly::{RatPoly, Rational};

/// Half-open interval `(lo, hi]` holding exactly one distinct real root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: Rational,
    pub multiplicity: usize,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl RootInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

/// Pairwise coprime square-free factors `(a_k, k)` with `f = c·Π a_k^k`,
/// read off the tower `g_0 = f, g_{i+1} = gcd(g_i, g_i')`.
pub fn squarefree_decomposition(f: &RatPoly) -> Result<Vec<(RatPoly, usize)>, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let mut tower = vec![f.monic()];
    while tower.last().expect("nonempty").degree() != Some(0) {
        let g = tower.last().expect("nonempty");
        tower.push(g.gcd(&g.derivative())?);
    }
    // s_k = g_{k-1} / g_k carries every root of multiplicity >= k
    let layers: Vec<RatPoly> = tower
        .windows(2)
        .map(|w| w[0].exact_div(&w[1]))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (k, s) in layers.iter().enumerate() {
        let exact = match layers.get(k + 1) {
            Some(next) => s.exact_div(next)?,
            None => s.clone(),
        };
        if exact.degree() != Some(0) {
            out.push((exact, k + 1));
        }
    }
    Ok(out)
}

pub fn squarefree_part(f: &RatPoly) -> Result<RatPoly, RootError> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(RatPoly::one());
    }
    Ok(f.exact_div(&f.gcd(&f.derivative())?)?.monic())
}

/// `1 + max |a_i / a_d|`; every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &RatPoly) -> Rational {
    let lead = f.leading().cloned().unwrap_or_else(Rational::one).abs();
    let max = f
        .coeffs()
        .iter()
        .take(f.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m });
    max + Rational::one()
}

/// Disjoint isolating intervals for the roots of a square-free polynomial,
/// in increasing order. Endpoints are never roots.
pub(crate) fn isolate_squarefree(p: &RatPoly) -> Result<Vec<(Rational, Rational)>, RootError> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(p)?;
    let bound = cauchy_bound(p);
    let lo = -bound.clone();
    let total = chain.variations_at(&lo) - chain.variations_at(&bound);
    let mut stack = vec![(lo, bound, total)];
    let mut out = Vec::new();
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                let left = chain.variations_at(&lo) - chain.variations_at(&mid);
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, count - left));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A point strictly inside `(lo, hi)` that is not a root of `p`.
fn split_point(p: &RatPoly, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !p.evaluate(&mid).is_zero() {
        return mid;
    }
    let mut step = (hi - lo) / Rational::from_integer(8.into());
    // p has finitely many roots, so some dyadic nudge avoids them all
    loop {
        for cand in [&mid + &step, &mid - &step] {
            if !p.evaluate(&cand).is_zero() {
                return cand;
            }
        }
        step /= &two;
    }
}

/// Bisects an isolating interval of square-free `p` once, keeping the half
/// with the root.
pub(crate) fn refine(chain: &SturmChain, p: &RatPoly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mid = split_point(p, lo, hi);
    if chain.variations_at(lo) - chain.variations_at(&mid) == 1 {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// All real roots with multiplicities, in increasing order.
pub fn isolate_roots(f: &RatPoly) -> Result<Vec<RootInterval>, RootError> {
    let profile = RootProfile::new(&[f])?;
    Ok(profile
        .intervals
        .into_iter()
        .zip(profile.multiplicities)
        .map(|((lo, hi), m)| RootInterval {
            lo,
            hi,
            multiplicity: m[0],
        })
        .collect())
}

/// Distinct real roots of a set of polynomials isolated against each other:
/// interval `i` holds one root, and `multiplicities[i][j]` is its multiplicity
/// in polynomial `j` (0 if it is not a root there). Ascending order, so
/// interval indices compare exactly like the roots they hold.
#[derive(Debug, Clone)]
pub struct RootProfile {
    pub intervals: Vec<(Rational, Rational)>,
    pub multiplicities: Vec<Vec<usize>>,
}

impl RootProfile {
    pub fn new(polys: &[&RatPoly]) -> Result<Self, RootError> {
        let mut decompositions = Vec::with_capacity(polys.len());
        let mut joint = RatPoly::one();
        for p in polys {
            let parts = squarefree_decomposition(p)?;
            for (a, _) in &parts {
                joint = &joint * a;
            }
            decompositions.push(parts);
        }
        let joint = squarefree_part(&joint)?;
        let intervals = isolate_squarefree(&joint)?;
        let chains: Vec<Vec<(SturmChain, usize)>> = decompositions
            .iter()
            .map(|parts| {
                parts
                    .iter()
                    .map(|(a, k)| SturmChain::new(a).map(|c| (c, *k)))
                    .collect::<Result<_, _>>()
            })
            .collect::<Result<_, _>>()?;
        let multiplicities = intervals
            .iter()
            .map(|(lo, hi)| {
                chains
                    .iter()
                    .map(|parts| {
                        parts
                            .iter()
                            .find(|(c, _)| c.variations_at(lo) > c.variations_at(hi))
                            .map_or(0, |(_, k)| *k)
                    })
                    .collect()
            })
            .collect();
        Ok(RootProfile {
            intervals,
            multiplicities,
        })
    }

    /// Root sequence of polynomial `j`, largest first, as interval indices
    /// repeated by multiplicity.
    pub fn root_sequence(&self, j: usize) -> Vec<usize> {
        (0..self.intervals.len())
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.multiplicities[i][j]))
            .collect()
    }
}
