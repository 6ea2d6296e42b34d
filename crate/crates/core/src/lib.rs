//! Community-preserving sampling for streaming graphs.
//!
//! A streaming graph arrives as an ordered sequence of edge events and is
//! never available in full. This crate maintains a bounded sample graph
//! together with an incrementally repaired community structure while the
//! stream is consumed, and ships everything needed to study how well the
//! sample preserves the communities of the aggregate graph:
//!
//! - [`stream`]: edge streams, ordering transforms, and a planted-partition
//!   generator with ground-truth labels;
//! - [`graph`]: the bounded sample graph and the candidate-node buffer;
//! - [`partition`]: community assignments with incrementally maintained
//!   modularity aggregates;
//! - [`community`]: exact modularity deltas, local move cascades, and
//!   triangle-percolation repair after node removals;
//! - [`louvain`]: seeded Louvain community detection;
//! - [`sampler`]: the compas sampling state machine;
//! - [`baselines`]: streaming node/edge/BFS/partial-induction samplers;
//! - [`eval`]: community quality scores, KS distribution comparison, and
//!   partition agreement metrics;
//! - [`runner`]: one-call pipelines used by the CLI and benchmarks;
//! - [`io`]: the text file formats shared by all tools.

pub mod baselines;
pub mod community;
pub mod error;
pub mod eval;
pub mod graph;
pub mod io;
pub mod louvain;
pub mod partition;
pub mod runner;
pub mod sampler;
pub mod stream;
pub mod util;

pub use error::Error;

/// Node identifier as it appears in edge files: a non-negative integer.
pub type NodeId = u64;

/// Community identifier within a [`partition::Partition`].
pub type CommunityId = u64;

/// Result alias for fallible toolkit operations.
pub type Result<T> = std::result::Result<T, Error>;
