use super::{Bits, Graph};

/// Chordality test: maximum-cardinality search, then check that the reverse
/// visit order is a perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut weight = vec![0u32; n];
    for _ in 0..n {
        let v = Bits(g.vertex_mask() & !visited)
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .expect("unvisited vertex");
        for w in Bits(g.neighbors(v) & !visited) {
            weight[w] += 1;
        }
        visited |= 1 << v;
        order.push(v);
    }
    // For each v, its neighbours visited earlier must form a clique; it is
    // enough to check they all neighbour the most recently visited of them.
    let mut earlier = 0u64;
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        let back = g.neighbors(v) & earlier;
        if let Some(parent) = Bits(back).max_by_key(|&w| position[w]) {
            let rest = back & !(1 << parent);
            if rest & !g.neighbors(parent) != 0 {
                return false;
            }
        }
        earlier |= 1 << v;
    }
    true
}
