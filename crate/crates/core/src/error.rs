use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size guard was exceeded (dimension, host order, ...).
    Resource {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// A twist specification is malformed.
    InvalidSpec(String),
    /// An input lies outside the domain of the operation.
    Domain(String),
    /// A vertex id is not a vertex of the host graph.
    VertexOutOfRange { vertex: usize, order: usize },
    /// The arc set is not a forest of vertex-disjoint directed paths.
    Structure { vertex: usize, kind: StructureKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// More than one arc enters the vertex.
    InDegree,
    /// More than one arc leaves the vertex.
    OutDegree,
    /// The vertex lies on a directed cycle of arcs.
    DirectedCycle,
    /// An arc is not an edge of the host, or both orientations are present.
    NotAnArcSet,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::InDegree => "in-degree greater than one",
            StructureKind::OutDegree => "out-degree greater than one",
            StructureKind::DirectedCycle => "lies on a directed cycle",
            StructureKind::NotAnArcSet => "violates the arc set rules",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Resource { what, limit, got } => {
                write!(f, "{what} {got} exceeds the limit of {limit}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid twist spec: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} is not in a graph of order {order}")
            }
            Error::Structure { vertex, kind } => write!(f, "vertex {vertex}: {kind}"),
        }
    }
}

impl core::error::Error for Error {}
