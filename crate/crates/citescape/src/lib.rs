//! citescape turns an aggregated journal-journal citation matrix into
//! per-journal citation environment maps.
//!
//! For a seed journal the toolkit selects the journals citing it (or cited
//! by it) above a percentage threshold of its global citation total, builds
//! the dense citation matrix among them, computes cosine similarities
//! between the citation profiles, derives local impact factors with and
//! without within-journal citations, and writes the result as a Pajek map
//! file whose node sizes carry the impact percentages. Graph metrics
//! (components, k-cores, articulation points), factor analysis of the
//! profiles, and rank statistics round out the picture.

#![forbid(unsafe_code)]

pub mod cli;
pub mod environment;
pub mod fixtures;
pub mod graph;
pub mod impact;
pub mod ingest;
pub mod layout;
pub mod pajek;
pub mod similarity;
pub mod stats;

pub use environment::{Direction, Environment};
pub use ingest::{CitationGraph, JournalId, JournalMeta, SourceIndex};
pub use pajek::{MapDocument, Shape, Vertex};
pub use similarity::SimilarityMatrix;
pub use stats::LoadingsMatrix;
