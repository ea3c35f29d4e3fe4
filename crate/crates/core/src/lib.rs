//! Exact computation of joins, weak cores, oddness, weak oddness and
//! Fano-flows of bridgeless cubic graphs, with per-graph checkers for the
//! perfect-matching conjectures that relate them.
//!
//! ```
//! use cubic_cores::{CubicGraph, Budget};
//! use cubic_cores::cores::mu3;
//!
//! let p = CubicGraph::petersen();
//! let r = mu3(&p, &Budget::unlimited()).unwrap();
//! assert_eq!(r.value(), Some(6)); // l2 = 2·μ3
//! ```
//!
//! Start with [`graph`] and [`graph6`] for input, [`factors`] for
//! matchings and joins, [`cores`] for cover triples and the conjecture
//! checkers, [`parity`] for oddness, [`fano`] for flows and [`gadgets`] for
//! the K4-expansion. [`harness`] drives batch runs over graph6 files.

pub mod budget;
pub mod cores;
pub mod edges;
pub mod error;
pub mod factors;
pub mod fano;
pub mod gadgets;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod parity;

pub use budget::{Budget, BudgetExceeded};
pub use edges::EdgeSubset;
pub use error::{Error, Result};
pub use factors::{Join, PerfectMatching};
pub use graph::{build_named, CubicGraph, NamedGraph};
pub use graph6::{parse_graph6, write_graph6};
