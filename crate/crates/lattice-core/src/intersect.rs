use serde::{Deserialize, Serialize};

use crate::cell::{Cell, PolytopeComplex};
use crate::hull::affine_dim;
use crate::point::LatticePoint3 as P3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IntersectionKind {
    Disjoint,
    SharedVertex,
    SharedEdge,
    SharedFacet,
    Overlap,
}

impl IntersectionKind {
    fn from_dim(d: i32) -> IntersectionKind {
        match d {
            i32::MIN..=-1 => IntersectionKind::Disjoint,
            0 => IntersectionKind::SharedVertex,
            1 => IntersectionKind::SharedEdge,
            _ => IntersectionKind::SharedFacet,
        }
    }
}

/// Separating axis test for two full-dimensional cells.
///
/// Convex polytopes in space have disjoint interiors iff some facet normal
/// of either, or some cross product of edge directions, weakly separates them.
pub fn interiors_overlap(a: &Cell, b: &Cell) -> bool {
    if a.dim() < 3 || b.dim() < 3 {
        return false;
    }
    let (ha, hb) = (a.hull(), b.hull());
    let mut axes: Vec<P3> = ha.facet_normals();
    axes.extend(hb.facet_normals());
    let ea = a.edges();
    let eb = b.edges();
    for &(p, q) in &ea {
        for &(r, s) in &eb {
            let n = (q - p).cross(s - r);
            if !n.is_zero() {
                axes.push(n);
            }
        }
    }
    let range = |pts: &[P3], n: P3| {
        let vals = pts.iter().map(|p| n.dot(*p));
        (vals.clone().min().unwrap(), vals.max().unwrap())
    };
    !axes.iter().any(|&n| {
        let (alo, ahi) = range(a.points(), n);
        let (blo, bhi) = range(b.points(), n);
        ahi <= blo || bhi <= alo
    })
}

/// Largest dimension of a face shared by a cell of `c1` and a cell of `c2`,
/// or `Overlap` when two cells have meeting interiors.
pub fn complexes_intersect(c1: &PolytopeComplex, c2: &PolytopeComplex) -> IntersectionKind {
    let mut best = -1;
    for a in &c1.cells {
        for b in &c2.cells {
            if a == b && a.dim() == 3 || interiors_overlap(a, b) {
                return IntersectionKind::Overlap;
            }
            let shared: Vec<P3> = a.points().iter().copied().filter(|p| b.points().contains(p)).collect();
            best = best.max(affine_dim(&shared));
        }
    }
    IntersectionKind::from_dim(best)
}
