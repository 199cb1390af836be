use std::collections::HashSet;

use rayon::prelude::*;

use super::HarnessError;
use crate::graph::{canonical_form, low_mask, Graph};

/// Largest order accepted by [`enumerate_small`].
pub const ENUMERATE_MAX_ORDER: usize = 7;

/// The labelled graph on `n` vertices whose edge set is given by the bits of
/// `code`, pairs taken in the order `(0,1), (0,2), (1,2), (0,3), …`.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edge list")
}

/// All `2^{n(n-1)/2}` labelled graphs on `n ≤ 7` vertices.
pub fn all_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > ENUMERATE_MAX_ORDER {
        return Err(HarnessError::TooLargeForEnumeration(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |code| labeled_graph(n, code)))
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, found by canonicalising every labelled graph. Sorted.
pub fn enumerate_small(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if n > ENUMERATE_MAX_ORDER {
        return Err(HarnessError::TooLargeForEnumeration(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let classes: HashSet<Graph> = (0..1u64 << pairs)
        .into_par_iter()
        .map(|code| canonical_form(&labeled_graph(n, code)))
        .collect();
    Ok(sorted(classes))
}

/// Classes of order `n + 1` from the complete list of classes of order `n`:
/// every graph on `n + 1` vertices is some class of order `n` plus a vertex,
/// so adding a vertex with every possible neighbourhood and deduplicating
/// reaches each class exactly once.
pub fn extend_classes(classes: &[Graph]) -> Vec<Graph> {
    let found: HashSet<Graph> = classes
        .par_iter()
        .flat_map_iter(|g| {
            (0..=low_mask(g.order()))
                .map(move |nbrs| canonical_form(&g.with_vertex(nbrs).expect("order below the maximum")))
        })
        .collect();
    sorted(found)
}

/// Classes of every order `0..=max_n`, enumerating directly up to order 7
/// and extending beyond.
pub fn classes_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let level = if n <= ENUMERATE_MAX_ORDER {
            enumerate_small(n).expect("small order")
        } else {
            extend_classes(levels.last().expect("previous level"))
        };
        levels.push(level);
    }
    levels
}

fn sorted(set: HashSet<Graph>) -> Vec<Graph> {
    let mut v: Vec<Graph> = set.into_iter().collect();
    v.sort_unstable_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.cmp(b)));
    v
}
