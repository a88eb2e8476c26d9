//! Exact betweenness centrality for sparse, tree-like graphs.
//!
//! The main solver runs in O(kn) time and space, where `k` is the feedback
//! edge number: degree-one vertices are folded into pend weights, the rest
//! splits into biconnected blocks at cut vertices, and each block is solved
//! either by a linear cycle program or by table-driven processing of its
//! maximal induced paths. A classic per-source Brandes solver and an
//! exact-rational brute-force oracle are included as baselines and test
//! anchors.
//!
//! Entry points: [`pipeline::compute_bc`] for graphs, [`fen::block_bc`] for
//! single biconnected blocks, [`oracle::oracle_bc`] for exact reference
//! values.

pub mod brandes;
pub mod cycle;
pub mod decompose;
pub mod fen;
pub mod generate;
pub mod graph;
pub mod named;
pub mod oracle;
pub mod pipeline;
pub mod selftest;

pub use graph::{build_graph, BCScores, Graph, VertexId, WeightedGraph};
pub use pipeline::{compute_bc, compute_bc_weighted, SolveOptions, SolverChoice};
