//! Canonical labelling by individualisation and refinement.
//!
//! Every leaf of the search tree (a discrete equitable partition) gives a
//! relabelling; the canonical one is the leaf whose relabelled adjacency rows
//! are lexicographically smallest. Twin vertices in a target cell lead to
//! isomorphic subtrees, so only one of each twin class is explored.

use super::{Bits, Graph};

/// Splits cells until every cell sees every other cell uniformly.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = Bits(cell)
                    .map(|v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut mask = 0u64;
                let mut key = keyed[0].0;
                for (k, v) in keyed {
                    if k != key {
                        next.push(mask);
                        split = true;
                        mask = 0;
                        key = k;
                    }
                    mask |= 1 << v;
                }
                next.push(mask);
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u64>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if tried.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.visit(child);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let mut perm = vec![0usize; n];
        for (pos, c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = Bits(self.g.neighbors(v)).fold(0u64, |acc, w| acc | (1 << perm[w]));
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, perm));
        }
    }
}

/// A relabelling `perm` (old `v` becomes `perm[v]`) that sends every graph
/// in the isomorphism class of `g` to the same labelled graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    // seed with the degree partition so the first refinement pass is cheap
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (g.neighbors(v).count_ones(), v)).collect();
    by_degree.sort_unstable();
    let mut cells = Vec::new();
    let mut mask = 0u64;
    let mut key = by_degree[0].0;
    for (d, v) in by_degree {
        if d != key {
            cells.push(mask);
            mask = 0;
            key = d;
        }
        mask |= 1 << v;
    }
    cells.push(mask);
    let mut search = Search { g, best: None };
    search.visit(cells);
    search.best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..400 {
            let n = rng.gen_range(0..=12);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
        }
    }

    #[test]
    fn symmetric_graphs() {
        for g in [
            Graph::petersen(),
            Graph::cycle(9).unwrap(),
            Graph::empty(20).unwrap(),
            Graph::complete(20).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(c.edge_count(), g.edge_count());
            assert_eq!(c, canonical_form(&c));
        }
    }

    #[test]
    fn distinguishes_nonisomorphic() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        let p4 = Graph::path(4).unwrap();
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
        assert!(are_isomorphic(&p4, &p4.permute(&[3, 1, 0, 2])));
    }
}
