use num_bigint::BigInt;
use num_traits::One;

use super::FamilyError;
use crate::graph::{Graph, MAX_ORDER};
use crate::poly::IntPoly;

/// The cubic `σ(G)/x^{m+3}` for the variants with closed forms:
/// `x³ + (m+7)x² + (5m+12)x + (5m+4)` for variant 2 and
/// `x³ + (m+8)x² + (5m+16)x + (5m+7)` for variant 3.
pub fn f_family_cubic(variant: u8, m: usize) -> Result<IntPoly, FamilyError> {
    let m = BigInt::from(m);
    let five_m = &m * 5;
    let (c2, c1, c0) = match variant {
        2 => (&m + 7, &five_m + 12, &five_m + 4),
        3 => (&m + 8, &five_m + 16, &five_m + 7),
        other => return Err(FamilyError::UnknownVariant(other)),
    };
    Ok(IntPoly::new(vec![c0, c1, c2, BigInt::one()]))
}

/// `x^{m+3}` times [`f_family_cubic`].
pub fn f_family_sigma(variant: u8, m: usize) -> Result<IntPoly, FamilyError> {
    Ok(f_family_cubic(variant, m)?.shift_by_power(m + 3))
}

/// Variant 5 is `(C5 ∨ K_m) ⊍ K1`. Variant 4 is `C5 ∨ K_m` with one extra
/// vertex adjacent only to vertex 0 of the `C5`.
pub fn f45_construction(variant: u8, m: usize) -> Result<Graph, FamilyError> {
    if !matches!(variant, 4 | 5) {
        return Err(FamilyError::UnknownVariant(variant));
    }
    if m + 6 > MAX_ORDER {
        return Err(FamilyError::TooLarge(m + 6));
    }
    let core = Graph::cycle(5)?.join(&Graph::complete(m)?)?;
    Ok(match variant {
        5 => core.disjoint_union(&Graph::complete(1)?)?,
        _ => core.with_vertex(1)?,
    })
}

/// `h ∨ K_t`.
pub fn join_with_clique(h: &Graph, t: usize) -> Result<Graph, FamilyError> {
    if h.order() + t > MAX_ORDER {
        return Err(FamilyError::TooLarge(h.order() + t));
    }
    Ok(h.join(&Graph::complete(t)?)?)
}
