//! Modification problems towards edge-coloured graph homomorphisms.
//!
//! Given an edge-coloured multigraph `G`, a fixed target `H` and a budget
//! `k`, decide whether deleting at most `k` vertices, deleting at most `k`
//! edges, or switching at at most `k` vertices makes `G` map to `H`.

pub mod cli;
pub mod dichotomy;
pub mod ecgraph;
pub mod error;
pub mod fptsolve;
pub mod gadgets;
pub mod homcheck;
pub mod twosat;

pub use ecgraph::{Colour, ColouredGraph, CoreName, Edge, EdgeRef, Target};
pub use error::{Error, Result};
pub use fptsolve::{solve, Certificate, ProblemKind, Solution, SolveOptions};
