//! Exact and Monte Carlo tools for the graded graph of zigzag diagrams
//! (compositions): counting, Martin kernels, paintbox samplers, the
//! polynomial density model of descent classes, RSK projection to Young's
//! lattice, and descent-walk limits.

pub mod composition;
pub mod elr;
pub mod error;
pub mod graph;
pub mod harness;
pub mod paintbox;
pub mod rational;
pub mod rng;
pub mod rsk;
pub mod stats;
pub mod walk;

pub use composition::{
    CellKind, Composition, ConcatMode, Permutation, Run, RunDecomposition, Slope, Window,
};
pub use error::{Error, Result};
