//! Constructions, verifiers and exact oracles around biclique partitions of
//! graphs, chromatic numbers, and the clique vs. independent set problem.
//!
//! The centrepiece is the graph `G(n)` on `[n]^7` whose edges are the pairs
//! with agreement pattern in a 120-point set `S ⊂ {0,1}^7`. It has a
//! biclique partition of size `O(n^5)` while its chromatic number is at
//! least `n^7 / 3n`.

pub mod algebra;
pub mod bitset;
pub mod certificate;
pub mod clis;
pub mod config;
pub mod corpus;
pub mod counterexample;
pub mod cube;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod report;

pub use certificate::{Certificate, Verdict};
pub use error::{Error, Result};
pub use graph::{Biclique, BicliqueSystem, Graph};
