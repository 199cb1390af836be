//! Simple graphs of order at most 64 with one adjacency word per vertex.

mod canon;
mod chordal;
mod coloring;
mod cover;
mod edgelist;
mod graph6;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling};
pub use chordal::is_chordal;
pub use coloring::{chromatic_number, clique_number, is_k_colorable};
pub use cover::{independence_number, vertex_cover_number};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};

use std::fmt;

use thiserror::Error;

/// Largest supported order; adjacency rows are single `u64` words.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// Bitmask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A vertex-labelled simple graph. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Cycle 0-1-…-(n-1)-0. Orders below 3 give the path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edge_list(10, &edges).expect("valid edge list")
    }

    /// Builds the simple graph with exactly the listed edges. Duplicate pairs
    /// (in either orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let all = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & (1 << v) != 0 {
                return Err(GraphError::Loop(v));
            }
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
            for w in Bits(row) {
                if adj[w] & (1 << v) == 0 {
                    return Err(GraphError::NotAnEdge(w, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbour set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.adj[v] | (1 << v) == all)
    }

    /// Whether `set` is an independent set.
    #[inline]
    pub fn is_independent(&self, set: u64) -> bool {
        Bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// Whether `set` induces a clique.
    #[inline]
    pub fn is_clique(&self, set: u64) -> bool {
        Bits(set).all(|v| (self.adj[v] | (1 << v)) & set == set)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let low = low_mask(self.n);
        let high = low_mask(n) & !low;
        let mut adj = Vec::with_capacity(n);
        for &row in &self.adj {
            adj.push(if cross { row | high } else { row });
        }
        for &row in &other.adj {
            let shifted = row << self.n;
            adj.push(if cross { shifted | low } else { shifted });
        }
        Ok(Graph { n, adj })
    }

    /// `self ∨ other`: disjoint copies plus every cross edge. `other` is
    /// relabelled by shifting its vertices up by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    /// Disjoint union, same labelling convention as [`Graph::join`].
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Removes the vertices in `set`; survivors keep their relative order.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut drop = 0u64;
        for &v in set {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            drop |= 1 << v;
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !drop))
    }

    /// Subgraph induced by `set`, relabelled `0..set.len()` in the order given.
    pub fn induced(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        for &v in set {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            if seen & (1 << v) != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        Ok(self.relabel_subset(set))
    }

    /// Subgraph induced by a vertex mask, preserving increasing label order.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        self.relabel_subset(&keep)
    }

    fn relabel_subset(&self, keep: &[usize]) -> Graph {
        let adj = keep
            .iter()
            .map(|&old| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[old] & (1 << w) != 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        Graph { n: keep.len(), adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0u64, |acc, w| acc | (1 << perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Adds a new vertex `n` adjacent to the vertices in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_ORDER {
            return Err(GraphError::TooLarge(self.n + 1));
        }
        let neighbors = neighbors & self.vertex_mask();
        let mut adj = self.adj.clone();
        for v in Bits(neighbors) {
            adj[v] |= 1 << self.n;
        }
        adj.push(neighbors);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Merges `v` into `u` (which must be adjacent or not, either works) and
    /// removes `v`. Labels above `v` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut adj = self.adj.clone();
        let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
        for w in Bits(adj[v]) {
            adj[w] &= !(1 << v);
        }
        for w in Bits(merged) {
            adj[w] |= 1 << u;
        }
        adj[u] = merged;
        adj[v] = 0;
        let g = Graph { n: self.n, adj };
        Ok(g.induced_by_mask(self.vertex_mask() & !(1 << v)))
    }

    /// Whether the edge `uv` lies in some triangle.
    pub fn edge_in_triangle(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.adj[u] & self.adj[v] != 0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Connected components as vertex masks, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let next = Bits(frontier).fold(0u64, |acc, w| acc | self.adj[w]) & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Whether `other` (same order) is a spanning subgraph of `self` under some
    /// relabelling. Exhaustive over embeddings with degree pruning.
    pub fn contains_spanning_copy(&self, other: &Graph) -> bool {
        if self.n != other.n || other.edge_count() > self.edge_count() {
            return false;
        }
        let mut image = vec![usize::MAX; self.n];
        embed(other, self, 0, 0, &mut image)
    }
}

fn embed(small: &Graph, big: &Graph, v: usize, used: u64, image: &mut [usize]) -> bool {
    if v == small.n {
        return true;
    }
    for target in Bits(big.vertex_mask() & !used) {
        if big.degree(target) < small.degree(v) {
            continue;
        }
        let ok = Bits(small.adj[v] & low_mask(v)).all(|w| big.has_edge(image[w], target));
        if ok {
            image[v] = target;
            if embed(small, big, v + 1, used | (1 << target), image) {
                return true;
            }
        }
    }
    false
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(p3.edge_count(), 2);
        assert!(Graph::from_edge_list(2, &[]).unwrap().is_edgeless());
        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(
            Graph::from_edge_list(4, &all).unwrap(),
            Graph::complete(4).unwrap()
        );
        // duplicates collapse
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::TooLarge(65)));
        assert!(Graph::complete(64).is_ok());
    }

    #[test]
    fn complement_cases() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert_eq!(cc.components().len(), 1);
        assert_eq!(cc.complement(), c5);
        assert_eq!(Graph::empty(0).unwrap().complement(), Graph::empty(0).unwrap());
    }

    #[test]
    fn join_and_union() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
        let e2 = Graph::empty(2).unwrap();
        let c4 = Graph::from_edge_list(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(e2.join(&e2).unwrap(), c4);
        let c5 = Graph::cycle(5).unwrap();
        for m in 0..4 {
            let j = c5.join(&Graph::complete(m).unwrap()).unwrap();
            assert_eq!(j.order(), 5 + m);
        }
        let u = c5.disjoint_union(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(u.edge_count(), 7);
        assert!(Graph::complete(40)
            .unwrap()
            .join(&Graph::empty(25).unwrap())
            .is_err());
        let z = Graph::empty(0).unwrap();
        assert_eq!(c5.join(&z).unwrap(), c5);
        assert_eq!(z.disjoint_union(&c5).unwrap(), c5);
    }

    #[test]
    fn deletions_and_induced() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.delete_edge(0, 1).unwrap(), p3);
        assert_eq!(
            Graph::path(3).unwrap().delete_edge(0, 2),
            Err(GraphError::NotAnEdge(0, 2))
        );
        assert_eq!(Graph::complete(4).unwrap().delete_vertices(&[3]).unwrap(), k3);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced(&[0, 1, 2]).unwrap(), Graph::path(3).unwrap());
        assert!(c5.induced(&[0, 7]).is_err());
        assert!(c5.induced(&[1, 1]).is_err());
        // order of the list is respected
        let star = c5.induced(&[1, 0, 2]).unwrap();
        assert_eq!(star.degree(0), 2);
    }

    #[test]
    fn triangles() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.edge_in_triangle(0, 1).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.edges().all(|(u, v)| !c5.edge_in_triangle(u, v).unwrap()));
        assert!(Graph::cycle(4).unwrap().is_triangle_free());
        assert!(!k3.is_triangle_free());
        assert!(c5.edge_in_triangle(0, 2).is_err());
    }

    #[test]
    fn contraction() {
        // contracting an edge of C4 gives K3
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.contract(0, 1).unwrap(), Graph::complete(3).unwrap());
        // contracting a non-edge of C4 gives P3 centred at the merged vertex
        let p = c4.contract(0, 2).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.degree(0), 2);
    }

    #[test]
    fn spanning_copy() {
        let c5 = Graph::cycle(5).unwrap();
        let p5 = Graph::path(5).unwrap();
        assert!(c5.contains_spanning_copy(&p5));
        assert!(!p5.contains_spanning_copy(&c5));
        let scrambled = p5.permute(&[3, 0, 4, 1, 2]);
        assert!(c5.contains_spanning_copy(&scrambled));
    }
}
