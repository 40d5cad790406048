//! Exact structural graph algorithms on small graphs: induced-subgraph
//! detection, modules and clique-separators of modules, the decomposition of
//! weighted Q{P4}-free graphs, and exact (weighted) colouring.

pub mod coloring;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{EdgeCut, Graph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, parse_graph6_many, write_graph6};
pub use weights::VertexWeights;
