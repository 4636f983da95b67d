//! Maximization of nonnegative monotone submodular functions under
//! graph-logic constraints.
//!
//! Three solver pipelines are provided, each with a machine-checkable
//! approximation certificate:
//!
//! - [`solver::mso`]: constraints compiled to structured DNNF circuits over a
//!   tree decomposition, optimized by recursive greedy over vtree separators.
//! - [`solver::low_degree`]: Gaifman-form first-order constraints, optimized
//!   by block greedy with exhaustive local search plus suspect-and-recurse.
//! - [`solver::bounded_expansion`]: quantifier-free normal-form constraints
//!   over a transitive fraternal augmentation, optimized by centroid
//!   recursion over equality-forest trees plus suspect-and-recurse over
//!   forbidden patterns.
//!
//! The [`oracle`] module holds brute-force exact solvers used to verify
//! every certificate at test scale. Its feasibility evaluators are kept
//! independent of the solvers' incremental bookkeeping.

pub mod augment;
pub mod compiler;
pub mod decomp;
pub mod dnnf;
pub mod error;
pub mod graph;
pub mod logic;
pub mod oracle;
pub mod report;
pub mod solver;
pub mod submodular;

pub use error::{Error, Result};
