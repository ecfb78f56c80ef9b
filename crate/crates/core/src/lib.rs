//! Exact computation of edit distance, brittleness and capacity parameters
//! for graph classes defined by forbidden topological minors.
//!
//! Graphs are simple with at most 64 vertices; vertex sets are bitmasks.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod classes;
pub mod constructions;
pub mod embedding;
pub mod generate;
pub mod graph;
pub mod parameters;
pub mod recognize;
pub mod traps;

pub use bitset::VertexSet;
pub use classes::GraphClass;
pub use graph::{Edge, Graph, GraphError};
