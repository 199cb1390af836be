use super::{from_counts, SigmaError, SigmaPolynomial};
use crate::graph::Graph;

/// Largest order accepted by [`sigma_bruteforce`]; Bell(14) ≈ 1.9·10⁸.
pub const BRUTE_FORCE_MAX_ORDER: usize = 16;

/// Counts independent partitions by walking restricted-growth strings,
/// abandoning a prefix as soon as some block stops being independent.
pub fn sigma_bruteforce(g: &Graph) -> Result<SigmaPolynomial, SigmaError> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(SigmaError::TooLargeForBruteForce {
            n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let mut counts = vec![0u64; n + 1];
    let mut blocks = Vec::with_capacity(n);
    walk(g, 0, &mut blocks, &mut counts);
    Ok(from_counts(counts))
}

fn walk(g: &Graph, v: usize, blocks: &mut Vec<u64>, counts: &mut [u64]) {
    if v == g.order() {
        counts[blocks.len()] += 1;
        return;
    }
    let nbrs = g.neighbors(v);
    for b in 0..blocks.len() {
        if blocks[b] & nbrs == 0 {
            blocks[b] |= 1 << v;
            walk(g, v + 1, blocks, counts);
            blocks[b] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    walk(g, v + 1, blocks, counts);
    blocks.pop();
}
