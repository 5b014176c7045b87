//! Exact convex-combination certificates for 2-edge-connected spanning
//! subgraph covers of LP relaxation points.
//!
//! The main entry points are [`uniform::cover_7_8`], [`uniform::cover_13_15`],
//! [`square::square_certificate`] and [`triangle::triangle_certificate`].
//! Every certificate they produce can be replayed with
//! [`verify::verify_certificate`]; all arithmetic is exact rational.

#![forbid(unsafe_code)]

pub mod ratio;
pub mod error;
pub mod graph;
pub mod vector;
pub mod comb;
pub mod lp;
pub mod tree;
pub mod matching;
pub mod cycle_cover;
pub mod pairing;
pub mod rainbow;
pub mod treepack;
pub mod coloring;
pub mod glue;
pub mod uniform;
pub mod square;
pub mod triangle;
pub mod verify;
pub mod gen;
pub mod io;

pub use error::Error;
pub use ratio::Rat;
