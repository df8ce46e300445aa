//! Component edge connectivity of the folded hypercube.
//!
//! The crate is split the same way the verification work is:
//!
//! * [`graph`] models `Q_n` and `FQ_n` over integer vertex labels and answers
//!   induced-subgraph, boundary and component queries.
//! * [`extremal`] holds the greedy binary decomposition, the closed forms for
//!   the maximum induced degree sum `ex_m`, the incomplete (folded) hypercubes,
//!   the inequality suite built on them and a brute-force maximizer.
//! * [`connectivity`] evaluates `(n+1)g - ex_g/2`, builds the matching
//!   `(g+1)`-component edge cut and computes `cλ_k` exactly for small cubes.

pub mod connectivity;
pub mod error;
pub mod extremal;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{ComponentProfile, CubeTopology, Edge, EdgeCut, EdgeKind, Vertex, VertexSet};

/// Node-expansion budget used when a caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;
