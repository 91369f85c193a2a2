//! Desk-scale laboratory for extremal questions on small random graphs.
//!
//! The crate bundles exact solvers for the largest clique-free and
//! multipartite subgraphs of a graph, the counting functionals and cut
//! statistics those solvers are compared against, rooted-pattern copy
//! counting, lower-tail bound evaluators with Monte-Carlo validators, and a
//! reproducible experiment harness.  Everything is exact where exactness is
//! feasible (rational threshold comparisons, enumeration oracles) and seeded
//! where it is not.

pub mod bits;
pub mod bounds;
pub mod coloring;
pub mod counts;
pub mod cuts;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod params;
pub mod regularity;
pub mod rigidity;
pub mod rng;
pub mod rooted;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
