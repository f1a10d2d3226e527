//! Bootstrap percolation on Hamming graphs, complete graphs and their line
//! graphs: simulation engines, explicit small percolating sets, closed-form
//! sizes and bounds, an exact polynomial-method lower bound, and exhaustive
//! search on tiny instances.

pub mod constructions;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod seed_file;
pub mod sets;

pub use engine::{
    is_percolating_edges_linegraph, is_percolating_edges_star, is_percolating_vertices, percolate_edges_linegraph,
    percolate_edges_star, percolate_vertices, ActivationTrace, Process, TraceReport,
};
pub use error::{Error, Result};
pub use graph::{cartesian_product, make_complete, make_hamming, make_line_graph, EdgeIndexMap, Graph, HammingSpace};
pub use rational::Rational;
pub use sets::{EdgeSet, Edges, ElementSet, VertexSet, Vertices};
