//! Exact tools for cut polytopes of small graphs. The centrepiece is the
//! graph-theoretic test for a Gorenstein cut polytope, backed by facet
//! systems and lattice-point counts that can be checked by brute force.
//!
//! All arithmetic is exact. Rust APIs index vertices and edges from 0; the
//! text and JSON formats used by the CLI are 1-based.

pub mod ehrhart;
pub mod error;
pub mod gorenstein;
pub mod graph;
pub mod linalg;
pub mod polytope;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
