use std::collections::HashSet;

use proptest::prelude::*;
use sigmaroots::graph::{
    are_isomorphic, canonical_form, canonical_labeling, chromatic_number, clique_number, independence_number,
    is_chordal, is_k_colorable, parse_edge_list, parse_graph6, to_graph6, vertex_cover_number, Graph,
    GraphError,
};
use sigmaroots::harness::{enumerate_small, read_graph6_file};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest `k` admitting a proper colouring, by trying every assignment.
fn chromatic_by_search(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut colour = vec![0; n];
                for c in colour.iter_mut() {
                    *c = code % k as u64;
                    code /= k as u64;
                }
                g.edges().all(|(u, v)| colour[u] != colour[v])
            })
        })
        .unwrap()
}

#[test]
fn atlas_matches_enumeration() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/atlas7.g6");
    let atlas = read_graph6_file(path.as_ref(), true).unwrap().graphs;
    assert_eq!(atlas.len(), 1253);
    let from_atlas: HashSet<Graph> = atlas.iter().map(canonical_form).collect();
    assert_eq!(
        from_atlas.len(),
        1253,
        "atlas entries are pairwise non-isomorphic"
    );
    let enumerated: HashSet<Graph> = (0..=7).flat_map(|n| enumerate_small(n).unwrap()).collect();
    assert_eq!(from_atlas, enumerated);
}

#[test]
fn orbit_sizes_sum_to_labelled_count() {
    // Σ n!/|Aut(G)| over the classes of order n counts labelled graphs
    let perms = permutations(7);
    let total: u64 = enumerate_small(7)
        .unwrap()
        .iter()
        .map(|g| 5040 / perms.iter().filter(|p| &g.permute(p) == g).count() as u64)
        .sum();
    assert_eq!(total, 1 << 21);
}

#[test]
fn named_graphs() {
    let p = Graph::petersen();
    assert_eq!((p.order(), p.edge_count()), (10, 15));
    assert!((0..10).all(|v| p.degree(v) == 3));
    assert_eq!(chromatic_number(&p), 3);
    assert_eq!(clique_number(&p), 2);
    assert_eq!(independence_number(&p), 4);
    assert_eq!(vertex_cover_number(&p), 6);
    assert!(!is_chordal(&p));
    assert_eq!(chromatic_number(&Graph::cycle(7).unwrap()), 3);
    assert_eq!(chromatic_number(&Graph::complete(9).unwrap()), 9);
    assert!(is_chordal(&Graph::path(8).unwrap()));
    assert!(!is_chordal(&Graph::cycle(4).unwrap()));
    assert!(is_chordal(&Graph::complete(6).unwrap()));
}

#[test]
fn graph6_known_strings() {
    assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
    assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    let big = Graph::path(63).unwrap();
    let text = to_graph6(&big);
    assert!(text.starts_with("~??~"), "{text}");
    assert_eq!(parse_graph6(&text).unwrap(), big);
    assert!(matches!(parse_graph6("D"), Err(GraphError::Graph6(_))));
    assert!(matches!(parse_graph6(""), Err(GraphError::Graph6(_))));
}

#[test]
fn construction_errors() {
    assert_eq!(Graph::empty(65), Err(GraphError::TooLarge(65)));
    assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::Loop(1)));
    assert_eq!(
        Graph::from_edge_list(3, &[(0, 3)]),
        Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
    );
    let g = Graph::path(3).unwrap();
    assert_eq!(g.delete_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    assert_eq!(g.induced(&[1, 1]), Err(GraphError::DuplicateVertex(1)));
    assert!(matches!(
        parse_edge_list("3\n0 x\n"),
        Err(GraphError::EdgeList { line: 2, .. })
    ));
}

#[test]
fn spanning_subgraph_search() {
    let c6 = Graph::cycle(6).unwrap();
    let p6 = Graph::path(6).unwrap();
    assert!(c6.contains_spanning_copy(&p6));
    assert!(!p6.contains_spanning_copy(&c6));
    // two triangles and a hexagon have the same degrees but neither contains the other
    let two_triangles = Graph::complete(3)
        .unwrap()
        .disjoint_union(&Graph::complete(3).unwrap())
        .unwrap();
    assert!(!c6.contains_spanning_copy(&two_triangles));
    assert!(!two_triangles.contains_spanning_copy(&c6));
    assert!(Graph::complete(6).unwrap().contains_spanning_copy(&two_triangles));
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn canonical_form_is_invariant((g, p) in arb_graph(12).prop_flat_map(|g| { let n = g.order(); (Just(g), arb_perm(n)) })) {
        let h = g.permute(&p);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        let lab = canonical_labeling(&g);
        prop_assert_eq!(g.permute(&lab), canonical_form(&g));
    }

    #[test]
    fn chromatic_number_matches_search(g in arb_graph(7)) {
        let chi = chromatic_number(&g);
        prop_assert_eq!(chi, chromatic_by_search(&g));
        prop_assert!(is_k_colorable(&g, chi));
        prop_assert!(chi == 0 || !is_k_colorable(&g, chi - 1));
        prop_assert!(clique_number(&g) <= chi);
    }

    #[test]
    fn cover_and_independence_are_complementary(g in arb_graph(14)) {
        prop_assert_eq!(vertex_cover_number(&g) + independence_number(&g), g.order());
        prop_assert_eq!(independence_number(&g), clique_number(&g.complement()));
    }

    #[test]
    fn join_and_union_orders(g in arb_graph(8), h in arb_graph(8)) {
        let j = g.join(&h).unwrap();
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(chromatic_number(&j), chromatic_number(&g) + chromatic_number(&h));
        prop_assert_eq!(chromatic_number(&u), chromatic_number(&g).max(chromatic_number(&h)));
        prop_assert_eq!(j.complement(), g.complement().disjoint_union(&h.complement()).unwrap());
    }
}
