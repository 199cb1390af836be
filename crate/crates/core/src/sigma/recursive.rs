use std::collections::HashMap;

use super::{sigma_cliquecover, x_pow, SigmaPolynomial};
use crate::graph::{canonical_form, Graph};
use crate::poly::IntPoly;

/// Graphs up to this order are memoised under their canonical form.
const MEMO_MAX_ORDER: usize = 10;

/// Works on `h = ḡ`. An edge `uv` of `h` in no triangle is either a block of
/// its own in a clique partition of `h` or is unused, so
/// `σ(h̄) = σ(complement of h − uv) + x·σ(complement of h − {u, v})`.
/// With no such edge left the clique-cover count takes over.
pub fn sigma_recursive(g: &Graph) -> SigmaPolynomial {
    let mut memo = HashMap::new();
    let poly = recurse(&g.complement(), &mut memo);
    SigmaPolynomial::from_coefficients(poly.into_coeffs())
}

fn recurse(h: &Graph, memo: &mut HashMap<Graph, IntPoly>) -> IntPoly {
    if h.is_edgeless() {
        return x_pow(h.order()).into_poly();
    }
    let key = (h.order() <= MEMO_MAX_ORDER).then(|| canonical_form(h));
    if let Some(hit) = key.as_ref().and_then(|k| memo.get(k)) {
        return hit.clone();
    }
    let edge = h.edges().find(|&(u, v)| h.neighbors(u) & h.neighbors(v) == 0);
    let out = match edge {
        Some((u, v)) => {
            let without = h.delete_edge(u, v).expect("edge of h");
            let removed = h.delete_vertices(&[u, v]).expect("vertices of h");
            &recurse(&without, memo) + &recurse(&removed, memo).shift_by_power(1)
        }
        None => sigma_cliquecover(&h.complement()).into_poly(),
    };
    if let Some(k) = key {
        memo.insert(k, out.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::sigma_bruteforce;

    #[test]
    fn examples() {
        assert_eq!(
            sigma_recursive(&Graph::complete(2).unwrap()).into_poly(),
            IntPoly::from_i64s(&[0, 0, 1])
        );
        assert_eq!(
            sigma_recursive(&Graph::empty(2).unwrap()).into_poly(),
            IntPoly::from_i64s(&[0, 1, 1])
        );
        assert_eq!(
            sigma_recursive(&Graph::empty(0).unwrap()).into_poly(),
            IntPoly::from_i64s(&[1])
        );
        for g in [
            Graph::cycle(8).unwrap(),
            Graph::petersen(),
            Graph::empty(7).unwrap(),
        ] {
            assert_eq!(sigma_recursive(&g), sigma_bruteforce(&g).unwrap());
        }
    }
}
