//! Degree-irregularity invariants for small graphs, exhaustive enumeration
//! of trees and bipartite classes, and a registry of published bounds and
//! extremal statements checked empirically against those corpora.
//!
//! Claim verdicts never assume a statement is true: FAILS is an expected,
//! first-class outcome and always carries replayable graph6 witnesses.

pub mod canon;
pub mod claims;
pub mod enumeration;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod value;
pub mod verifier;

pub use canon::{certificate, GraphCertificate};
pub use graph::{Bipartition, DegreeSequence, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6};
pub use invariants::{invariant_bundle, InvariantBundle};
