//! Multitwists on reduction systems of closed oriented surfaces.
//!
//! A reduction system is modelled by its reduction system graph: one vertex per
//! component of the cut surface, one edge per curve. Everything the crate
//! decides about a multitwist (membership in the Torelli group, the rank of the
//! Torelli multitwist group, canonical decompositions into separating twists
//! and bounding-pair maps, the level-`m` criterion) is read off that graph, and
//! the [`homology`] module recomputes the same answers from the integer
//! symplectic action on first homology.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod classes;
pub mod graph;
pub mod homology;
pub mod label;
pub mod matrix;
pub mod surface;
pub mod torelli;

pub use classes::{classify, verify_classification, EdgeClassification, EdgeType};
pub use graph::{Cycle, EdgeId, GraphError, Multigraph, SpanningTree, Step, Trail, VertexId};
pub use homology::{HomologyModel, SymplecticLattice, Transvection};
pub use label::Label;
pub use matrix::IntMatrix;
pub use surface::SurfaceModel;
pub use torelli::{Multitwist, TorelliViolation, TwistFactor};
