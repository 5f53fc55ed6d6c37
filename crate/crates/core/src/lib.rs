//! Induced-path convexities on small graphs.
//!
//! Bitset graphs with graph6 I/O and canonical forms, the geodesic,
//! monophonic, m³, m₃ and Steiner interval operators, convexity hulls and
//! convex-geometry tests, forbidden-pattern detection, and an exhaustive
//! harness that checks structural claims over all small graphs.

pub mod canon;
pub mod cli;
pub mod consistency;
pub mod convexity;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod intervals;
pub mod patterns;

pub use canon::{canonical_form, canonical_graph, canonical_labeling};
pub use convexity::{Alignment, ConvexityKind, GeometryVerdict};
pub use enumerate::enumerate_graphs;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
