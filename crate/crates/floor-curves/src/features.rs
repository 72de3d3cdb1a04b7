use lattice_core::LatticePoint2 as P2;
use serde::{Deserialize, Serialize};

use crate::catalog::FloorCurve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Diagonal,
}

impl Orientation {
    /// Whether the lattice segment `a`-`b` is dual to a tropical edge of this orientation.
    pub fn matches(self, a: P2, b: P2) -> bool {
        let d = b - a;
        match self {
            Orientation::Horizontal => d.x == 0 && d.y != 0,
            Orientation::Diagonal => d.x == -d.y && d.x != 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoundedEdgeRecord {
    pub orientation: Orientation,
    pub dual_edge: (P2, P2),
    pub floor_degree: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexMode {
    NotAdjacentHorizontal,
    NotAdjacentDiagonal,
}

impl VertexMode {
    pub fn orientation(self) -> Orientation {
        match self {
            VertexMode::NotAdjacentHorizontal => Orientation::Horizontal,
            VertexMode::NotAdjacentDiagonal => Orientation::Diagonal,
        }
    }
}

/// A vertex of the floor curve, given by its dual cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpecialVertex {
    pub cell: Vec<P2>,
}

fn on_boundary(d: i64, a: P2, b: P2) -> bool {
    (a.x == 0 && b.x == 0) || (a.y == 0 && b.y == 0) || (a.x + a.y == d && b.x + b.y == d)
}

/// Horizontal and diagonal bounded edges of the floor curve.
pub fn bounded_edges(floor: &FloorCurve) -> Vec<BoundedEdgeRecord> {
    let d = floor.degree;
    let mut out: Vec<BoundedEdgeRecord> = floor
        .subdivision
        .edges()
        .into_iter()
        .filter(|&(a, b)| !on_boundary(d, a, b))
        .filter_map(|(a, b)| {
            [Orientation::Horizontal, Orientation::Diagonal]
                .into_iter()
                .find(|o| o.matches(a, b))
                .map(|orientation| BoundedEdgeRecord { orientation, dual_edge: (a, b), floor_degree: d })
        })
        .collect();
    out.sort();
    out
}

/// Vertices with no adjacent edge (bounded or not) of the mode's orientation.
pub fn special_vertices(floor: &FloorCurve, mode: VertexMode) -> Vec<SpecialVertex> {
    let o = mode.orientation();
    floor
        .subdivision
        .cells
        .iter()
        .filter(|cell| {
            let n = cell.len();
            !(0..n).any(|i| (i + 1..n).any(|j| o.matches(cell[i], cell[j]) && is_cell_edge(cell, cell[i], cell[j])))
        })
        .map(|cell| SpecialVertex { cell: cell.clone() })
        .collect()
}

/// Whether `a`-`b` is a side of the convex polygon `cell`.
fn is_cell_edge(cell: &[P2], a: P2, b: P2) -> bool {
    let side = |p: P2| {
        let (u, v) = (b - a, p - a);
        (u.x * v.y - u.y * v.x).signum()
    };
    let signs: Vec<i64> = cell.iter().map(|&p| side(p)).filter(|&s| s != 0).collect();
    signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0)
}
