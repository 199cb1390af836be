//! Stirling numbers, falling-factorial basis changes and Newton's
//! log-concavity inequalities.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{IntPoly, PolyError};

/// Row `n` of the Stirling numbers of the second kind: `S(n, 0..=n)`.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m {
                &row[k] * BigInt::from(k)
            } else {
                BigInt::zero()
            };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// `S(n, k)` by the recurrence `S(n,k) = k·S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt, PolyError> {
    if k > n {
        return Err(PolyError::StirlingRange { n, k });
    }
    Ok(stirling2_row(n).swap_remove(k))
}

/// Expands `Σ a_i·x(x-1)…(x-i+1)` in the monomial basis.
pub fn from_falling_factorial(a: &[BigInt]) -> IntPoly {
    let mut falling = IntPoly::one();
    let mut total = IntPoly::zero();
    for (i, c) in a.iter().enumerate() {
        if i > 0 {
            falling = &falling * &IntPoly::linear(BigInt::from(i - 1));
        }
        if !c.is_zero() {
            total = &total + &falling.scale(c);
        }
    }
    total
}

/// Coefficients `b` with `p = Σ b_k (x)↓k`, via `x^n = Σ S(n,k)(x)↓k`.
/// The result has length `deg p + 1` (empty for the zero polynomial).
pub fn to_falling_factorial(p: &IntPoly) -> Vec<BigInt> {
    let len = p.coeffs().len();
    let mut b = vec![BigInt::zero(); len];
    for (n, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, s) in stirling2_row(n).iter().enumerate() {
            b[k] += c * s;
        }
    }
    b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogConcavity {
    pub holds: bool,
    /// First interior index `i` with `a_i² < a_{i-1}·a_{i+1}`.
    pub first_violation: Option<usize>,
}

/// Checks `a_i² ≥ a_{i-1}·a_{i+1}` at every interior index of the support
/// (first to last nonzero entry).
pub fn is_log_concave(coeffs: &[BigInt]) -> LogConcavity {
    let lo = coeffs.iter().position(|c| !c.is_zero());
    let hi = coeffs.iter().rposition(|c| !c.is_zero());
    let violation = match (lo, hi) {
        (Some(lo), Some(hi)) if hi >= lo + 2 => {
            (lo + 1..hi).find(|&i| &coeffs[i] * &coeffs[i] < &coeffs[i - 1] * &coeffs[i + 1])
        }
        _ => None,
    };
    LogConcavity {
        holds: violation.is_none(),
        first_violation: violation,
    }
}
