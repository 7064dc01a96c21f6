//! Sparse halves of triangle-free graphs.
//!
//! A set of `floor(n/2)` vertices is a sparse half when it spans at most
//! `n^2/50` edges. This crate builds and checks such sets and their weighted
//! relaxations in exact rational arithmetic:
//!
//! * [`graph`] and [`fd`]: graphs, blowups, the circulants `F_d`, the
//!   Petersen graph and star extensions `H*`;
//! * [`weighted`]: weight functions, halves, rounding, pushforward and lifting;
//! * [`homomorphism`]: homomorphism search, reduction to surjective maps into
//!   `F_d`, and disturbed pairs;
//! * [`halves`]: explicit sparse halves on weighted `F_d`, `C5` and `P*`, and
//!   the minimum-degree pipeline;
//! * [`approximation`]: approximation by blowups and the degree trichotomy;
//! * [`lemmas`]: exact evaluation and randomized falsification of the
//!   inequalities the constructions rely on;
//! * [`oracle`]: exhaustive ground truth for small graphs;
//! * [`io`], [`experiments`] and [`cli`]: file formats, instance generators
//!   and the command-line front end.

pub mod approximation;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod fd;
pub mod graph;
pub mod halves;
pub mod homomorphism;
pub mod io;
pub mod lemmas;
pub mod oracle;
pub mod rational;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{Graph, Partition, VertexSet};
pub use homomorphism::Homomorphism;
pub use rational::Rational;
pub use weighted::{Half, HalfDistribution, WeightFunction, WeightedGraph};
