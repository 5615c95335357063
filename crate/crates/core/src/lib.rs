//! Connected components reconfiguration.
//!
//! A configuration is a vertex subset of a graph; its components are the
//! tokens. Given two configurations with the same multiset of component
//! sizes, the solvers decide whether one can be transformed into the other
//! under a move rule while the multiset stays fixed, and produce a
//! sequence of moves when it can:
//!
//! * [`path`]: `CS` and `CJ` on path graphs.
//! * [`cograph`]: shortest `CS` / `CS1` sequences on cographs.
//! * [`chordal`]: shortest `CJ` sequences when all components have the
//!   same size, guaranteed on chordal graphs.
//! * [`oracle`]: exhaustive breadth-first search over every configuration,
//!   for any rule on small graphs.
//!
//! ```
//! use ccr::{path, Graph};
//!
//! let g = Graph::path(7);
//! // sizes <1, 3> must become <3, 1>: needs one free vertex to the right
//! let sol = path::solve_path_cj(&g, &[0, 2, 3, 4], &[0, 1, 2, 4]).unwrap();
//! assert!(sol.is_yes());
//! ```

pub mod chordal;
pub mod cograph;
pub mod config;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod path;
pub mod rules;
pub mod solution;

pub use config::Configuration;
pub use error::{Error, Result};
pub use graph::{Graph, SizeMultiset};
pub use rules::{adjacent, verify_sequence, ComponentMove, ReconfSequence, Rule};
pub use solution::{Answer, Solution};
