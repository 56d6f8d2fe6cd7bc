//! Twisted hypercubes and zero forcing.
//!
//! * [`graph`]: simple graphs, bit-string cubes, twisted hypercube recipes,
//!   Cartesian products.
//! * [`forcing`]: the colour change rule, derived sets and force traces.
//! * [`arcs`]: arc sets, chains, chain twists and forcing arc sets.
//! * [`minority`]: the minority cube family and its arc sets.
//! * [`solver`]: exact zero forcing numbers by exhaustive search.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arcs;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod minority;
pub mod solver;
pub mod vertex_set;

pub use arcs::{ArcEdge, ArcSet, ChainDecomposition, Detector};
pub use error::{Error, Result, StructureKind};
pub use forcing::{Force, ForcingTrace};
pub use graph::{BitVertex, CubeGraph, Graph, TwistSpec};
pub use minority::{MinorityCube, VertexClass};
pub use solver::{SolveOptions, SolveResult, SolveStatus};
pub use vertex_set::VertexSet;
