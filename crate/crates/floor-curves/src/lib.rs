//! Plane tropical floors through points in Mikhalkin position.
//!
//! A floor is stored by its dual subdivision and its marked lattice path.
//! Floors carrying node germs leave some lattice points off the path; the
//! catalog of such floors is generated and checked with exact heights.

pub mod catalog;
pub mod features;
pub mod germ;
pub mod mikhalkin;
pub mod realize;
pub mod render;

pub use catalog::{catalog, find_floor, germ_floors, smooth_floor, FloorCurve};
pub use features::{bounded_edges, special_vertices, BoundedEdgeRecord, Orientation, SpecialVertex, VertexMode};
pub use germ::{derive_germs, GermKind, NodeGerm, Omission, Status, StringEnd};
pub use mikhalkin::{Regime, Q};
pub use render::{descriptor, render_svg, FloorDescriptor};

use lattice_core::LatticePoint2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloorError {
    #[error("invalid floor degree {0}: must be 1, 2 or 3")]
    InvalidDegree(i64),
    #[error("no floor of degree {degree} carries {germs} node germs")]
    NoSuchFloor { degree: i64, germs: usize },
    #[error("omitted points are not a parallelogram")]
    NotParallelogram,
    #[error("heights of {0:?} cannot be resolved")]
    Unresolvable(Vec<LatticePoint2>),
    #[error("point {index} lies on {found:?} instead of the path edge {expected:?}")]
    PointCheck { index: usize, expected: Vec<LatticePoint2>, found: Vec<LatticePoint2> },
    #[error("cell {0:?} is not generic")]
    NonGeneric(Vec<LatticePoint2>),
    #[error("parallelogram {0:?} is not a cell")]
    MissingParallelogram(Vec<LatticePoint2>),
    #[error("{0} should be a vertex of the subdivision")]
    NotAVertex(LatticePoint2),
}
