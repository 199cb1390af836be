use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::SigmaError;
use crate::graph::{low_mask, Bits, Graph};

/// A disjoint union of cliques, given by their orders in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CliqueMultiset(Vec<usize>);

impl CliqueMultiset {
    pub fn new(mut orders: Vec<usize>) -> Result<Self, SigmaError> {
        if let Some(&bad) = orders.iter().find(|&&k| k < 2) {
            return Err(SigmaError::BadShape(bad));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CliqueMultiset(orders))
    }

    pub fn orders(&self) -> &[usize] {
        &self.0
    }

    /// `Σ (k - 1)` over the clique orders `k`.
    pub fn excess(&self) -> usize {
        self.0.iter().map(|k| k - 1).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().sum()
    }
}

/// One shape `⊍ K_{m_j + 1}` per integer partition `Σ m_j = i`, largest
/// parts first.
pub fn forbidden_shapes(i: usize) -> Vec<CliqueMultiset> {
    fn parts(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            parts(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i > 0 {
        parts(i, i, &mut Vec::new(), &mut out);
    }
    out.into_iter()
        .map(|p| CliqueMultiset(p.into_iter().map(|m| m + 1).collect()))
        .collect()
}

/// Number of subgraphs of `g` isomorphic to the disjoint union of cliques
/// described by `shape`.
pub fn eta_count(g: &Graph, shape: &CliqueMultiset) -> BigUint {
    count(g, shape.orders(), g.vertex_mask(), 0)
}

/// Places the cliques in order. Consecutive equal orders are forced to have
/// increasing least vertices so each unordered packing is counted once.
fn count(g: &Graph, orders: &[usize], avail: u64, min_floor: usize) -> BigUint {
    let Some((&k, rest)) = orders.split_first() else {
        return BigUint::one();
    };
    let same_next = rest.first() == Some(&k);
    let mut total = BigUint::zero();
    let mut stack = vec![(0u64, avail & !low_mask(min_floor))];
    // enumerate k-cliques by increasing vertex; the first vertex is the least
    while let Some((clique, cand)) = stack.pop() {
        if clique.count_ones() as usize == k {
            let least = clique.trailing_zeros() as usize;
            let floor = if same_next { least + 1 } else { 0 };
            total += count(g, rest, avail & !clique, floor);
            continue;
        }
        for w in Bits(cand) {
            let higher = cand & ((u64::MAX << w) << 1);
            stack.push((clique | (1 << w), higher & g.neighbors(w)));
        }
    }
    total
}
