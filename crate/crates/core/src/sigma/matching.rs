use std::collections::HashMap;

use num_bigint::BigInt;

use super::{SigmaError, SigmaPolynomial};
use crate::graph::{Bits, Graph};
use crate::poly::IntPoly;

/// `m(G, x) = Σ η_G(iK₂) x^i`, the generating function of matchings.
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    let mut memo = HashMap::new();
    let counts = matchings(g, g.vertex_mask(), &mut memo);
    IntPoly::new(counts.into_iter().map(BigInt::from).collect())
}

/// Either the lowest vertex is unmatched, or it is matched to one of its
/// remaining neighbours.
fn matchings(g: &Graph, mask: u64, memo: &mut HashMap<u64, Vec<u128>>) -> Vec<u128> {
    if mask.count_ones() < 2 {
        return vec![1];
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut out = matchings(g, rest, memo);
    out.resize(mask.count_ones() as usize / 2 + 1, 0);
    for w in Bits(rest & g.neighbors(v)) {
        for (i, c) in matchings(g, rest & !(1 << w), memo).iter().enumerate() {
            out[i + 1] += c;
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    memo.insert(mask, out.clone());
    out
}

/// For `g` whose complement is triangle-free, `σ(g) = x^n m(ḡ, 1/x)`: the
/// only cliques of the complement are vertices and edges.
pub fn sigma_via_matching(g: &Graph) -> Result<SigmaPolynomial, SigmaError> {
    let h = g.complement();
    if !h.is_triangle_free() {
        return Err(SigmaError::ComplementHasTriangle);
    }
    let n = g.order();
    let m = matching_polynomial(&h);
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (i, c) in m.coeffs().iter().enumerate() {
        coeffs[n - i] = c.clone();
    }
    Ok(SigmaPolynomial::from_coefficients(coeffs))
}
