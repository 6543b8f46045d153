//! Exact small-graph toolkit for studying when large treewidth forces large
//! cliques.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bitset-backed simple graphs, graph6 / edge-list I/O, edit
//!   operations (contraction, subdivision, line graphs) and canonical forms.
//! - [`generators`]: named families (walls, wheels, `K_{2,q}^+`, ...), seeded
//!   random generators and isomorphism-reduced exhaustive enumeration.
//! - [`invariants`]: clique, independence and chromatic numbers, exact
//!   treewidth with witness decompositions, Hadwiger number, minimal
//!   separators and the binomial Ramsey bound.
//! - [`containment`]: exact testers for the six containment relations
//!   (subgraph, induced subgraph, (induced) topological minor, (induced)
//!   minor), each returning a witness that revalidates on its own.
//! - [`classes`]: recognizers, binding functions and the bounded/unbounded
//!   verdicts for every relation.
//! - [`solvers`]: maximum weight independent set for `K_{1,q}`-induced-minor-free
//!   graphs, tree-decomposition dynamic programs, robust list colouring and
//!   the width-based clique approximation.
//! - [`harness`]: experiment specs, suites and reports.

pub mod bitset;
pub mod budget;
pub mod classes;
pub mod containment;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod solvers;

pub use bitset::VertexSet;
pub use budget::Budget;
pub use error::{Error, Refused, Result};
pub use graph::{Graph, WeightedGraph};
