//! Exact-arithmetic toolkit for comparing the first and second Zagreb indices
//! of simple graphs.
//!
//! The crate computes `M1 = sum of squared degrees` and `M2 = sum over edges
//! of the degree products`, decides `M1/n` vs `M2/m` by integer
//! cross-multiplication, builds the four-parameter equality family
//! `G(x, y, z, w)`, scans degree intervals for product/harmonic collisions,
//! and exhaustively enumerates small graphs as a ground-truth oracle. All
//! arithmetic is exact: big integers and big rationals, no floating point.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line front end live in the companion `zagreb-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod enumerate;
pub mod family;
pub mod graph;
pub mod intervals;
pub mod rational;
pub mod zagreb;

pub use graph::{EdgeClassCounts, Graph, GraphError, RegularityClass};
pub use rational::Rational;
pub use zagreb::{Verdict, ZagrebError, ZagrebReport};

// Re-exported so downstream crates use the same big-integer types.
pub use num_bigint;
