//! Distinguishing number `D` and distinguishing index `D'` of trees and
//! connected unicyclic graphs.
//!
//! The fast algorithms work on canonical codes of rooted trees: a tree is
//! anchored at its center, a unicyclic graph is cut into the trees hanging
//! off its cycle, and labelings are counted up to rooted isomorphism. A
//! brute-force [`oracle`] (explicit automorphism search and exhaustive
//! labeling enumeration) referees every fast result on small instances,
//! and [`enumerate`] supplies every tree and unicyclic graph of a given
//! order for exhaustive sweeps.
//!
//! ```
//! use distinguishing::{fixtures::spider_pair, tree_dist::classify_tree};
//!
//! let report = classify_tree(&spider_pair()).unwrap();
//! assert_eq!((report.d, report.dprime), (2, 3));
//! assert!(report.in_family_t());
//! ```

pub mod colabel;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod labeling;
pub mod oracle;
mod parallel;
pub mod report;
pub mod rooted;
pub mod tree_dist;
pub mod unicyclic;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, Permutation};
pub use labeling::{EdgeLabeling, Label, VertexLabeling};
