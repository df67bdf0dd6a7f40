//! Crate-wide error type.

use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The multigraph is not connected.
    NotConnected,
    /// Fewer than two vertices.
    TooFewVertices { vertices: usize },
    /// A loop edge (nonzero diagonal multiplicity).
    LoopEdge { vertex: usize },
    /// Multiplicity matrix is not symmetric.
    AsymmetricMultiplicity { i: usize, j: usize },
    /// Vertex index out of range.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// A partition block induces a disconnected subgraph.
    DisconnectedBlock { block: Vec<usize> },
    /// The blocks do not partition the vertex set.
    NotAPartition,
    /// Enumeration refused: too many vertices.
    VertexBound { vertices: usize, bound: usize },
    /// Closure refused: too many generators.
    GeneratorBound { generators: usize, bound: usize },
    /// Attempt to fire a stable vertex.
    StableVertex { vertex: usize },
    /// Attempt to fire the sink.
    SinkVertex,
    /// Configuration length does not match the number of non-sink vertices.
    ConfigurationLength { got: usize, expected: usize },
    /// A recurrence test was asked about an unstable configuration.
    UnstableConfiguration,
    /// The orientation does not have the sink as its unique sink.
    NotUniqueSink,
    /// A subset operation received an empty subset.
    EmptySubset,
    /// A subset operation received a subset containing the sink.
    SubsetContainsSink,
    /// The ideal has no pure power of some variable.
    NotArtinian { variable: usize },
    /// An Alexander dual was requested with a bound exceeded by a generator.
    GeneratorExceedsDualBound { generator: usize },
    /// A point does not satisfy the slice constraints.
    PointNotInSlice,
    /// Restriction of the bounded complex is empty.
    EmptyRestriction,
    /// Boundary maps do not compose to zero.
    BoundaryComposition { degree: usize, row: usize, col: usize },
    /// Affinely dependent geometry where a cell basis was expected.
    DegenerateCell { cell: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotConnected => write!(f, "graph not connected"),
            Error::TooFewVertices { vertices } => {
                write!(f, "need at least 2 vertices, got {vertices}")
            }
            Error::LoopEdge { vertex } => write!(f, "loop edge at vertex {}", vertex + 1),
            Error::AsymmetricMultiplicity { i, j } => {
                write!(f, "multiplicity not symmetric at ({}, {})", i + 1, j + 1)
            }
            Error::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(
                f,
                "vertex {} out of range 1..={vertex_count}",
                vertex + 1
            ),
            Error::DisconnectedBlock { block } => {
                write!(f, "partition block {{")?;
                for (k, v) in block.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v + 1)?;
                }
                write!(f, "}} induces a disconnected subgraph")
            }
            Error::NotAPartition => write!(f, "blocks do not partition the vertex set"),
            Error::VertexBound { vertices, bound } => write!(
                f,
                "enumeration refused: {vertices} vertices exceeds the bound {bound}"
            ),
            Error::GeneratorBound { generators, bound } => write!(
                f,
                "closure refused: {generators} generators exceeds the bound {bound}"
            ),
            Error::StableVertex { vertex } => {
                write!(f, "vertex {} is stable and cannot fire", vertex + 1)
            }
            Error::SinkVertex => write!(f, "the sink never fires"),
            Error::ConfigurationLength { got, expected } => write!(
                f,
                "configuration has {got} entries, expected {expected}"
            ),
            Error::UnstableConfiguration => write!(f, "configuration is not stable"),
            Error::NotUniqueSink => {
                write!(f, "orientation does not have the sink as its unique sink")
            }
            Error::EmptySubset => write!(f, "subset must be nonempty"),
            Error::SubsetContainsSink => write!(f, "subset must not contain the sink"),
            Error::NotArtinian { variable } => write!(
                f,
                "ideal is not artinian: no pure power of x{}",
                variable + 1
            ),
            Error::GeneratorExceedsDualBound { generator } => write!(
                f,
                "generator {generator} exceeds the dualizing exponent bound"
            ),
            Error::PointNotInSlice => write!(
                f,
                "point violates the slice constraints (sink coordinate 0, coordinate sum 1)"
            ),
            Error::EmptyRestriction => write!(f, "restriction of the bounded complex is empty"),
            Error::BoundaryComposition { degree, row, col } => write!(
                f,
                "boundary composition nonzero in degree {degree} at ({row}, {col})"
            ),
            Error::DegenerateCell { cell } => {
                write!(f, "degenerate affine basis for cell {cell}")
            }
        }
    }
}

impl core::error::Error for Error {}
