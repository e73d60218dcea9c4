//! Grundy domination, Z-Grundy domination and zero forcing on finite simple
//! graphs: exact solvers, proof-guided greedy constructions, the extremal
//! cubic graph catalog, and a harness that checks the regular-graph bounds
//! and characterizations over graph streams.

pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod heuristics;
pub mod sequences;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use sequences::{Variant, VertexSequence};
