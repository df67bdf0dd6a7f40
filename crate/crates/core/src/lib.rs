//! Exact combinatorial algebra of graph Laplacians.
//!
//! Everything here is driven by a single input: a connected loopless
//! multigraph with a designated sink vertex. From it the crate builds
//!
//! * the Laplacian, its reduced form, spanning-tree counts and the sandpile
//!   group ([`graph`], [`linalg`]);
//! * chip-firing dynamics, parking (superstable) and recurrent
//!   configurations ([`chip`]);
//! * the parking monomial ideal, its standard monomials, lcm lattice and
//!   Alexander dual, plus an independent Betti-number oracle ([`ideal`]);
//! * the bounded complex of the sliced graphical arrangement, with monomial
//!   labels and exact rational vertex coordinates ([`arrangement`]);
//! * the signed chain complex of that labeled complex and the verification
//!   that it resolves the parking ideal minimally ([`resolution`]);
//! * Whitney numbers and the chromatic polynomial of the lattice of
//!   connected partitions ([`whitney`]).
//!
//! All arithmetic is exact: arbitrary-precision integers for determinants,
//! Smith normal forms and homology ranks, and `i64` rationals for slice
//! coordinates. There are no floating-point numbers and no tolerances
//! anywhere in this crate.
//!
//! The crate is `no_std` (it only needs `alloc`); IO, file formats and the
//! command-line front end live in the companion `parkres` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
// index-style loops are the clearest way to write the dense matrix code
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod arrangement;
pub mod chip;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod resolution;
pub mod whitney;

pub use error::{Error, Result};
pub use graph::{AcyclicOrientation, ConnectedPartition, Multigraph};

/// Exact coordinate type for points of the arrangement slice.
pub type Rational = num_rational::Ratio<i64>;

/// Bounds on the exponential enumerations.
///
/// Connected partitions, acyclic orientations, Möbius functions and parking
/// functions are all exponential in the vertex count (and enumerating
/// acyclic orientations is #P-hard in general), so every operation that
/// walks one of these families refuses inputs beyond the configured bound
/// instead of silently running forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible number of vertices for enumerative operations.
    pub max_vertices: usize,
    /// Largest admissible number of generators for lcm-lattice closures and
    /// the Betti oracle.
    pub max_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 10,
            max_generators: 20,
        }
    }
}

impl Limits {
    /// Checks the vertex bound for an enumeration over `vertices` vertices.
    pub fn check_vertices(&self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices {
            Err(Error::VertexBound {
                vertices,
                bound: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }

    /// Checks the generator bound for an ideal with `generators` generators.
    pub fn check_generators(&self, generators: usize) -> Result<()> {
        if generators > self.max_generators {
            Err(Error::GeneratorBound {
                generators,
                bound: self.max_generators,
            })
        } else {
            Ok(())
        }
    }
}
