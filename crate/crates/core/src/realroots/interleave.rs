//! Interleaving root sequences and compatibility of real-rooted polynomials.
//!
//! Roots are never approximated: every polynomial involved is isolated
//! against the others in one [`RootProfile`], whose interval indices order the
//! roots exactly and identify shared roots.

use num_traits::{Signed, Zero};

use super::isolate::{isolate_squarefree, refine, squarefree_part, RootProfile};
use super::sturm::{is_real_rooted, RealRootCertificate, SturmChain};
use super::RootError;
use crate::poly::{RatPoly, Rational};

/// Rejects anything that is not a certified real-rooted polynomial with
/// positive leading coefficient.
fn require_certified(f: &RatPoly) -> Result<(), RootError> {
    let lead = f.leading().ok_or(RootError::ZeroPolynomial)?;
    if !lead.is_positive() {
        return Err(RootError::NonPositiveLeading);
    }
    if !is_real_rooted(f)?.verdict {
        return Err(RootError::NotRealRooted);
    }
    Ok(())
}

/// `a_1 ≥ b_1 ≥ a_2 ≥ b_2 ≥ …` with `|b| ≤ |a| ≤ |b| + 1`, sequences given
/// largest first as comparable keys.
fn sequence_interleaves(a: &[usize], b: &[usize]) -> bool {
    if !(b.len() <= a.len() && a.len() <= b.len() + 1) {
        return false;
    }
    (0..b.len()).all(|i| a[i] >= b[i] && a.get(i + 1).is_none_or(|next| b[i] >= *next))
}

/// Some sequence interleaves both `a` and `b` (largest first) iff their
/// lengths differ by at most one and neither runs ahead of the other:
/// `a_i ≤ b_{i-1}` and `b_i ≤ a_{i-1}` wherever defined. Taking
/// `c_i = max(a_i, b_i)` then works.
fn sequences_share_interleaver(a: &[usize], b: &[usize]) -> bool {
    if a.len().abs_diff(b.len()) > 1 {
        return false;
    }
    let ahead = |x: &[usize], y: &[usize]| (1..x.len()).any(|i| i - 1 < y.len() && x[i] > y[i - 1]);
    !ahead(a, b) && !ahead(b, a)
}

/// Whether the root sequence of `f` interleaves that of `g`.
pub fn interleaves(f: &RatPoly, g: &RatPoly) -> Result<bool, RootError> {
    require_certified(f)?;
    require_certified(g)?;
    let profile = RootProfile::new(&[f, g])?;
    Ok(sequence_interleaves(
        &profile.root_sequence(0),
        &profile.root_sequence(1),
    ))
}

/// Whether `f` and `g` have a common interleaver, equivalently whether every
/// nonnegative combination of them is real-rooted.
pub fn are_compatible(f: &RatPoly, g: &RatPoly) -> Result<bool, RootError> {
    require_certified(f)?;
    require_certified(g)?;
    let profile = RootProfile::new(&[f, g])?;
    Ok(sequences_share_interleaver(
        &profile.root_sequence(0),
        &profile.root_sequence(1),
    ))
}

/// Sturm certificate for `c·f + g`.
pub fn compatible_combo_probe(
    f: &RatPoly,
    g: &RatPoly,
    c: &Rational,
) -> Result<RealRootCertificate, RootError> {
    if !c.is_positive() {
        return Err(RootError::NonPositiveScalar);
    }
    for p in [f, g] {
        if !p.leading().ok_or(RootError::ZeroPolynomial)?.is_positive() {
            return Err(RootError::NonPositiveLeading);
        }
    }
    is_real_rooted(&(&f.scale(c) + g))
}

/// Pairwise compatibility of the whole list, which is equivalent to a common
/// interleaver for all of them.
pub fn common_interleaver_exists(fs: &[RatPoly]) -> Result<bool, RootError> {
    for f in fs {
        require_certified(f)?;
    }
    for (i, f) in fs.iter().enumerate() {
        for g in &fs[i + 1..] {
            if !are_compatible(f, g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sign of `p` at every real root of `t`, largest root first. Each isolating
/// interval of `t` is shrunk until `p` has no root in it, unless the two
/// polynomials share that root, in which case the sign is 0.
pub fn signs_at_roots(p: &RatPoly, t: &RatPoly) -> Result<Vec<i8>, RootError> {
    let ts = squarefree_part(t)?;
    if ts.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let t_chain = SturmChain::new(&ts)?;
    let shared = if p.is_zero() { ts.clone() } else { ts.gcd(p)? };
    let shared_chain = match shared.degree() {
        Some(d) if d > 0 => Some(SturmChain::new(&shared)?),
        _ => None,
    };
    let ps = if p.degree().unwrap_or(0) > 0 {
        Some(squarefree_part(p)?)
    } else {
        None
    };
    let p_chain = ps.as_ref().map(SturmChain::new).transpose()?;

    let mut out = Vec::new();
    for (lo, hi) in isolate_squarefree(&ts)?.into_iter().rev() {
        if p.is_zero() {
            out.push(0);
            continue;
        }
        if let Some(sc) = &shared_chain {
            if sc.variations_at(&lo) > sc.variations_at(&hi) {
                out.push(0);
                continue;
            }
        }
        let (mut lo, mut hi) = (lo, hi);
        if let (Some(pc), Some(ps)) = (&p_chain, &ps) {
            // p has no root at the (shrinking) endpoints or inside once done
            while ps.evaluate(&lo).is_zero()
                || ps.evaluate(&hi).is_zero()
                || pc.variations_at(&lo) != pc.variations_at(&hi)
            {
                (lo, hi) = refine(&t_chain, &ts, &lo, &hi);
            }
        }
        out.push(p.sign_at(&hi));
    }
    Ok(out)
}

/// Convenience for zero-free checks in tests and callers: `p` is nonzero at
/// every root of `t`.
pub fn avoids_roots_of(p: &RatPoly, t: &RatPoly) -> Result<bool, RootError> {
    Ok(signs_at_roots(p, t)?.iter().all(|s| *s != 0))
}
