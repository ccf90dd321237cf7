//! Structural analysis of cubic graphs at cyclic connectivity five:
//! cycle-separating edge cuts, decomposition along minimum 5-cuts into
//! cyclic parts, and constructive completion of each part back to a
//! cyclically 5-connected cubic graph, with exhaustive oracles validating
//! every step.

pub mod completion;
pub mod cyccut;
pub mod error;
pub mod graph;
pub mod iso;
pub mod named;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{parse_graph, CubicGraph, EdgeCut, EdgeId, GraphFormat, VertexSet};
