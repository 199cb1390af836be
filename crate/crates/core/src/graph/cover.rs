use super::{Bits, Graph};

/// Minimum vertex cover size, by branching on an uncovered edge: one of its
/// endpoints must be in the cover.
pub fn vertex_cover_number(g: &Graph) -> usize {
    let mut best = g.order().saturating_sub(1);
    if g.is_edgeless() {
        return 0;
    }
    branch(g, g.vertex_mask(), 0, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    g.order() - vertex_cover_number(g)
}

/// Greedy maximal matching in the subgraph induced by `alive`; its size is a
/// lower bound on the cover still needed.
fn matching_bound(g: &Graph, alive: u64) -> usize {
    let mut free = alive;
    let mut size = 0;
    for u in Bits(alive) {
        if free & (1 << u) == 0 {
            continue;
        }
        let nb = g.neighbors(u) & free;
        if nb != 0 {
            let v = nb.trailing_zeros() as usize;
            free &= !(1 << u) & !(1 << v);
            size += 1;
        }
    }
    size
}

fn branch(g: &Graph, alive: u64, taken: usize, best: &mut usize) {
    // endpoint of maximum remaining degree
    let pick = Bits(alive)
        .map(|v| (v, (g.neighbors(v) & alive).count_ones()))
        .max_by_key(|&(v, d)| (d, usize::MAX - v));
    let (u, deg) = match pick {
        Some(p) => p,
        None => {
            *best = (*best).min(taken);
            return;
        }
    };
    if deg == 0 {
        *best = (*best).min(taken);
        return;
    }
    if taken + matching_bound(g, alive) >= *best {
        return;
    }
    let v = (g.neighbors(u) & alive).trailing_zeros() as usize;
    branch(g, alive & !(1 << u), taken + 1, best);
    branch(g, alive & !(1 << v), taken + 1, best);
}
