//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use sigmaroots::poly::{RatPoly, Rational};
use sigmaroots::realroots::compatible_combo_probe;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Monic product of `x - r` over `roots`.
pub fn from_roots(roots: &[Rational]) -> RatPoly {
    roots
        .iter()
        .fold(RatPoly::one(), |acc, r| &acc * &RatPoly::linear(r.clone()))
}

/// A random real-rooted polynomial of degree at most `max_deg` with a random
/// positive leading coefficient and small rational roots, repeats allowed.
pub fn random_real_rooted<R: Rng>(rng: &mut R, max_deg: usize) -> RatPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut roots: Vec<Rational> = Vec::with_capacity(deg);
    for _ in 0..deg {
        if !roots.is_empty() && rng.gen_bool(0.15) {
            let i = rng.gen_range(0..roots.len());
            let r: Rational = roots[i].clone();
            roots.push(r);
        } else {
            roots.push(q(rng.gen_range(-12..=12), rng.gen_range(1..=3)));
        }
    }
    from_roots(&roots).scale(&q(rng.gen_range(1..=5), rng.gen_range(1..=3)))
}

/// Probe points for pairs declared compatible.
pub fn compatible_probe_points() -> Vec<Rational> {
    vec![q(1, 7), q(1, 2), q(1, 1), q(3, 1), q(41, 5)]
}

/// Budget of the refining grid: levels `0..=MAX_LEVEL`, exponents
/// `-MAX_EXP..=MAX_EXP`.
pub const MAX_LEVEL: u32 = 6;
pub const MAX_EXP: i32 = 24;

/// Level `L` of the refining grid: `2^e (1 + k/2^L)` for `|e| ≤ MAX_EXP`,
/// `0 ≤ k < 2^L`. Each level contains the previous one.
pub fn grid_level(level: u32) -> Vec<Rational> {
    let denom = 1i64 << level;
    let mut out = Vec::new();
    for e in -MAX_EXP..=MAX_EXP {
        let scale = if e >= 0 {
            Rational::from_integer(BigInt::one() << e as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
        };
        for k in 0..denom {
            out.push(&scale * q(denom + k, denom));
        }
    }
    out
}

/// Searches the refining grid for `c > 0` with `c·f + g` not real-rooted.
/// `None` means the budget ran out.
pub fn find_failing_scalar(f: &RatPoly, g: &RatPoly) -> Option<Rational> {
    for level in 0..=MAX_LEVEL {
        for c in grid_level(level) {
            if !compatible_combo_probe(f, g, &c).expect("valid probe").verdict {
                return Some(c);
            }
        }
    }
    None
}
