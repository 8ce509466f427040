//! Exact longest-path machinery for small graphs.
//!
//! The crate computes, without approximation: longest paths and their
//! endpoint-constrained variants (fibers), vertices lying on every longest
//! path (Gallai vertices), minimum longest-path transversals, structural
//! parameters (independence number, connectivity, girth, blocks), the
//! path-rewriting operations that power the structural lemmas (splices,
//! detours, attachment analysis), a factory for the named counterexample
//! constructions, and an exhaustive small-graph harness that scans theorem
//! predicates over corpora.
//!
//! Start with the runnable examples (`cargo run --example analyze_counterexample`)
//! or the `glpt` binary (`glpt analyze`, `glpt construct`, `glpt scan`,
//! `glpt search`, `glpt surgery`).

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod induced;
pub mod longest_path;
pub mod params;
pub mod surgery;
pub mod transversal;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};
pub use longest_path::{FiberQuery, Path};
