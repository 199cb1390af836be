use std::collections::HashMap;
use std::ops::AddAssign;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{from_counts, SigmaPolynomial};
use crate::graph::{Bits, Graph};

/// Counts partitions of the vertex set into cliques of the complement, which
/// are exactly the independent partitions of `g`. A block of order `m + 1`
/// lowers the block count by `m`, so `a_{n-i}` collects the clique packings of
/// total excess `i`.
///
/// The recursion removes the clique holding the lowest remaining vertex and
/// memoises on the remaining vertex set.
pub fn sigma_cliquecover(g: &Graph) -> SigmaPolynomial {
    let n = g.order();
    // Bell(32) < 2^128
    if n <= 32 {
        from_counts(Cover::<u128>::new(g).run())
    } else {
        from_counts(Cover::<BigUint>::new(g).run())
    }
}

trait Count: Clone + Zero + One + for<'a> AddAssign<&'a Self> + Into<BigInt> {}
impl Count for u128 {}
impl Count for BigUint {}

enum Memo<T> {
    Dense(Vec<Option<Vec<T>>>),
    Sparse(HashMap<u64, Vec<T>>),
}

struct Cover<T> {
    /// Adjacency of the complement.
    comp: Vec<u64>,
    memo: Memo<T>,
}

impl<T: Count> Cover<T> {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let comp = g.complement().rows().to_vec();
        let memo = if n <= 16 {
            Memo::Dense(vec![None; 1 << n])
        } else {
            Memo::Sparse(HashMap::new())
        };
        Cover { comp, memo }
    }

    fn run(mut self) -> Vec<T> {
        let n = self.comp.len();
        let full = crate::graph::low_mask(n);
        let mut counts = self.cover(full);
        counts.resize(n + 1, T::zero());
        counts
    }

    fn lookup(&self, mask: u64) -> Option<&Vec<T>> {
        match &self.memo {
            Memo::Dense(v) => v[mask as usize].as_ref(),
            Memo::Sparse(m) => m.get(&mask),
        }
    }

    /// `counts[k]` = partitions of `mask` into `k` cliques of the complement.
    fn cover(&mut self, mask: u64) -> Vec<T> {
        if mask == 0 {
            return vec![T::one()];
        }
        if let Some(hit) = self.lookup(mask) {
            return hit.clone();
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut out = vec![T::zero(); mask.count_ones() as usize + 1];
        let mut cliques = Vec::new();
        collect_cliques(&self.comp, 0, rest & self.comp[v], &mut cliques);
        for extra in cliques {
            let sub = self.cover(rest & !extra);
            for (k, c) in sub.iter().enumerate() {
                out[k + 1] += c;
            }
        }
        match &mut self.memo {
            Memo::Dense(vv) => vv[mask as usize] = Some(out.clone()),
            Memo::Sparse(m) => {
                m.insert(mask, out.clone());
            }
        }
        out
    }
}

/// Every clique of the complement within `cand`, as masks (including the
/// empty one), extending `base` by vertices above its largest member.
fn collect_cliques(comp: &[u64], base: u64, cand: u64, out: &mut Vec<u64>) {
    out.push(base);
    for w in Bits(cand) {
        let higher = cand & ((u64::MAX << w) << 1);
        collect_cliques(comp, base | (1 << w), higher & comp[w], out);
    }
}
