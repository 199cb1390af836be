//! Exact σ-polynomials of graphs and real-rootedness certificates.
//!
//! The σ-polynomial of a graph `G` on `n` vertices is `Σ a_i x^i`, where
//! `a_i` counts partitions of the vertex set into `i` nonempty independent
//! sets. This crate computes it by several independent exact methods,
//! certifies real-rootedness with Sturm sequences, decides compatibility of
//! real-rooted polynomials through common interleavers, and sweeps graph
//! corpora and parameterised families for counterexamples.

pub mod families;
pub mod graph;
pub mod harness;
pub mod poly;
pub mod realroots;
pub mod sigma;
