use super::{Bits, Graph};

/// Size of a maximum clique (0 for the null graph).
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    expand_clique(g, 0, g.vertex_mask(), &mut best);
    best
}

fn expand_clique(g: &Graph, size: usize, cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // greedy colouring of the candidates bounds the clique they can extend to
    let (order, bounds) = colour_bound(g, cand);
    let mut cand = cand;
    for (v, bound) in order.into_iter().zip(bounds).rev() {
        if size + bound <= *best {
            return;
        }
        expand_clique(g, size + 1, cand & g.neighbors(v), best);
        cand &= !(1 << v);
    }
}

/// Sequential greedy colouring of `set`; returns vertices in colour order with
/// the running colour count for each.
fn colour_bound(g: &Graph, set: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(set.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut left = set;
    let mut colour = 0;
    while left != 0 {
        colour += 1;
        let mut avail = left;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.neighbors(v);
            left &= !(1 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

/// DSatur greedy colouring; returns the number of colours used.
fn dsatur_greedy(g: &Graph) -> usize {
    let n = g.order();
    let mut classes: Vec<u64> = Vec::new();
    let mut uncoloured = g.vertex_mask();
    while uncoloured != 0 {
        let v = pick_saturated(g, &classes, uncoloured);
        match classes.iter().position(|&c| c & g.neighbors(v) == 0) {
            Some(c) => classes[c] |= 1 << v,
            None => classes.push(1 << v),
        }
        uncoloured &= !(1 << v);
    }
    debug_assert!(classes.len() <= n);
    classes.len()
}

fn saturation(g: &Graph, classes: &[u64], v: usize) -> usize {
    classes.iter().filter(|&&c| c & g.neighbors(v) != 0).count()
}

fn pick_saturated(g: &Graph, classes: &[u64], uncoloured: u64) -> usize {
    Bits(uncoloured)
        .max_by_key(|&v| {
            (
                saturation(g, classes, v),
                (g.neighbors(v) & uncoloured).count_ones(),
                usize::MAX - v,
            )
        })
        .expect("nonempty")
}

/// Whether the vertices split into at most `k` independent sets.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut classes = Vec::with_capacity(k);
    colour_search(g, k, &mut classes, g.vertex_mask())
}

fn colour_search(g: &Graph, k: usize, classes: &mut Vec<u64>, uncoloured: u64) -> bool {
    if uncoloured == 0 {
        return true;
    }
    let v = pick_saturated(g, classes, uncoloured);
    if saturation(g, classes, v) == k {
        return false;
    }
    for c in 0..classes.len() {
        if classes[c] & g.neighbors(v) == 0 {
            classes[c] |= 1 << v;
            if colour_search(g, k, classes, uncoloured & !(1 << v)) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    if classes.len() < k {
        classes.push(1 << v);
        if colour_search(g, k, classes, uncoloured & !(1 << v)) {
            return true;
        }
        classes.pop();
    }
    false
}

/// Exact chromatic number: clique lower bound, DSatur upper bound, exact
/// search for each `k` in between.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lower = clique_number(g);
    let upper = dsatur_greedy(g);
    (lower..upper).find(|&k| is_k_colorable(g, k)).unwrap_or(upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_chi(g: &Graph) -> usize {
        let n = g.order();
        (0..=n)
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|mut code| {
                    let mut col = vec![0u64; n];
                    for c in col.iter_mut() {
                        *c = code % k as u64;
                        code /= k as u64;
                    }
                    g.edges().all(|(u, v)| col[u] != col[v])
                })
            })
            .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::petersen()), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::petersen()), 2);
    }

    #[test]
    fn mycielski_grotzsch() {
        // Grötzsch graph: triangle-free with chromatic number 4
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i + 5, (i + 1) % 5));
            e.push((i + 5, (i + 4) % 5));
            e.push((i + 5, 10));
        }
        let g = Graph::from_edge_list(11, &e).unwrap();
        assert!(g.is_triangle_free());
        assert_eq!(chromatic_number(&g), 4);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            assert_eq!(chromatic_number(&g), brute_chi(&g), "{g:?}");
        }
    }
}
