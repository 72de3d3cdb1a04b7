//! Exact lattice geometry for floor-decomposed tropical cubic surfaces.
//!
//! Lattice points, dilated simplices, subdivision cells, circuit
//! classification of node complexes and their intersections.

pub mod bruteforce;
pub mod cell;
pub mod hull;
pub mod intersect;
pub mod point;
pub mod subdivision;

pub use cell::{classify_circuit, validate_complex, Cell, CircuitClass, ComplexShape, PolytopeComplex};
pub use intersect::{complexes_intersect, interiors_overlap, IntersectionKind};
pub use point::{
    lattice_length2, lattice_length3, simplex_points, triangle_points, LatticePoint2, LatticePoint3,
};
pub use subdivision::{embed_floor, embed_floor_in, upper_cells_2d, upper_cells_3d, Subdivision2};

/// Degree of the surfaces under study.
pub const SURFACE_DEGREE: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("invalid degree {0}: must be at least 1")]
    InvalidDegree(i64),
    #[error("slice {slice} does not hold a floor of degree {degree}")]
    InvalidSlice { slice: i64, degree: i64 },
    #[error("malformed complex: {0}")]
    MalformedComplex(String),
    #[error("unknown circuit class {0:?}")]
    UnknownClass(String),
}
