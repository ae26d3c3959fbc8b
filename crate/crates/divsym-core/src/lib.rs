//! Exact arithmetic for divided symmetrization over graphs, the
//! combinatorial counting formula on trees, and the coin-robbing absorption
//! process on cycles — every headline value reachable through at least two
//! independent computation paths.
//!
//! The crate is organized around the computation routes:
//!
//! - [`poly`] and [`graph`]: exact sparse polynomials over big rationals and
//!   ordered-vertex graphs.
//! - [`divsym`]: the symmetrization engine. For `deg f <= |E|` the
//!   symmetrized ratio is a constant, read off exactly at a generic point.
//! - [`tree_formula`]: sign times the number of acceptable permutations,
//!   which reproduces the engine's value on tree monomials without touching
//!   a single permutation-sum denominator.
//! - [`sandpile`]: the stochastic coin-robbing process, solved exactly as an
//!   absorbing chain and estimated by seeded Monte Carlo.
//! - [`identities`]: the path and cycle identities connecting all of the
//!   above.
//! - [`verify`]: batch cross-checks behind the `verify` CLI subcommand.

pub mod cli;
pub mod comb;
pub mod divsym;
pub mod error;
pub mod graph;
pub mod identities;
mod linalg;
pub mod poly;
pub mod rational;
pub mod sandpile;
pub mod tree_formula;
pub mod verify;

pub use error::{Error, ErrorCategory, Result};
