//! Max-DiCut vs. Cut: given a directed graph whose best directed cut has value
//! `rho`, find an undirected cut of value at least `rho`.
//!
//! The pipeline is
//!
//! 1. [`sdp::build_relaxation`] and [`sdp::solve_relaxation`]: the triangle-constrained
//!    vector relaxation of Max-DiCut, solved by a low-rank augmented Lagrangian method;
//! 2. [`rounding::deterministic_drive`]: threshold-plus-hyperplane rounding, searched over
//!    threshold intervals and seeded hyperplanes until the cut reaches the relaxation value;
//! 3. [`oracle`]: brute-force ground truth for small graphs.
//!
//! [`analysis`] holds the closed forms behind the per-edge rounding guarantee together with
//! grid certifiers and Monte Carlo cross-checks.

pub mod analysis;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod rounding;
pub mod sdp;

pub use error::{Error, Result};
pub use graph::{CutAssignment, CutValue, DirectedGraph};
pub use sdp::{SolverConfig, VectorSolution};
