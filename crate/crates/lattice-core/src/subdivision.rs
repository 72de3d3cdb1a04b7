use std::collections::BTreeSet;

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::point::{LatticePoint2 as P2, LatticePoint3 as P3};
use crate::{LatticeError, SURFACE_DEGREE};

/// A subdivision of the triangle of some degree, cells given by their points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision2 {
    pub degree: i64,
    pub cells: Vec<Vec<P2>>,
}

impl Subdivision2 {
    pub fn new(degree: i64, cells: impl IntoIterator<Item = Vec<P2>>) -> Subdivision2 {
        let cells: BTreeSet<Vec<P2>> = cells
            .into_iter()
            .map(|c| c.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        Subdivision2 { degree, cells: cells.into_iter().collect() }
    }

    /// Points used by at least one cell.
    pub fn vertices(&self) -> BTreeSet<P2> {
        self.cells.iter().flatten().copied().collect()
    }

    /// Edges of the subdivision: boundary segments of cells, as sorted pairs of
    /// consecutive points along the segment.
    pub fn edges(&self) -> BTreeSet<(P2, P2)> {
        let mut out = BTreeSet::new();
        for c in &self.cells {
            let lifted: Vec<P3> = c.iter().map(|p| p.lift(0)).collect();
            for f in crate::hull::Hull::new(&lifted).facets() {
                let v: Vec<P2> = f.iter().map(|p| P2::new(p.y, p.z)).collect();
                let (a, b) = (v[0], v[v.len() - 1]);
                out.insert((a.min(b), a.max(b)));
            }
        }
        out
    }
}

/// Lift every cell of a floor of degree `i` into the plane `x = d - i` of a
/// degree-`d` surface polytope.
pub fn embed_floor_in(sub: &Subdivision2, slice: i64, surface_degree: i64) -> Result<Vec<Cell>, LatticeError> {
    if !(0..=surface_degree).contains(&slice) || slice != surface_degree - sub.degree {
        return Err(LatticeError::InvalidSlice { slice, degree: sub.degree });
    }
    let cells: BTreeSet<Cell> = sub.cells.iter().map(|c| Cell::new(c.iter().map(|p| p.lift(slice)))).collect();
    Ok(cells.into_iter().collect())
}

/// [`embed_floor_in`] for the cubic surface.
pub fn embed_floor(sub: &Subdivision2, slice: i64) -> Result<Vec<Cell>, LatticeError> {
    embed_floor_in(sub, slice, SURFACE_DEGREE)
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: [[i64; 4]; 4]) -> i64 {
    (0..4)
        .map(|c| {
            let minor = |r: usize| -> [i64; 3] {
                let mut row = [0; 3];
                let mut k = 0;
                for (j, v) in m[r].iter().enumerate() {
                    if j != c {
                        row[k] = *v;
                        k += 1;
                    }
                }
                row
            };
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det3([minor(1), minor(2), minor(3)])
        })
        .sum()
}

/// Cells of the regular subdivision induced by lifting `points` to `heights`
/// (the upper hull, matching max-plus tropical polynomials).
pub fn upper_cells_3d(points: &[(P3, BigInt)]) -> Vec<Cell> {
    let n = points.len();
    let row = |p: P3| [p.x, p.y, p.z, 1];
    let mut cells = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let simplex = [a, b, c, d];
                    let base = simplex.map(|i| row(points[i].0));
                    let vol = det4(base);
                    if vol == 0 {
                        continue;
                    }
                    // vol * barycentric coordinates of p, as integers
                    let bary = |p: P3| -> [i64; 4] {
                        let mut out = [0; 4];
                        for (k, o) in out.iter_mut().enumerate() {
                            let mut m = base;
                            m[k] = row(p);
                            *o = det4(m);
                        }
                        out
                    };
                    if let Some(cell) = support(points, &simplex, vol, bary) {
                        cells.insert(Cell::new(cell));
                    }
                }
            }
        }
    }
    cells.into_iter().collect()
}

/// Maximal cells of the regular subdivision of a plane point set.
pub fn upper_cells_2d(points: &[(P2, BigInt)]) -> Vec<Vec<P2>> {
    let n = points.len();
    let row = |p: P2| [p.x, p.y, 1];
    let lifted: Vec<(P3, BigInt)> = points.iter().map(|(p, h)| (p.lift(0), h.clone())).collect();
    let mut cells = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let simplex = [a, b, c];
                let base = simplex.map(|i| row(points[i].0));
                let vol = det3(base);
                if vol == 0 {
                    continue;
                }
                let bary = |p: P3| -> [i64; 3] {
                    let mut out = [0; 3];
                    for (k, o) in out.iter_mut().enumerate() {
                        let mut m = base;
                        m[k] = [p.y, p.z, 1];
                        *o = det3(m);
                    }
                    out
                };
                if let Some(cell) = support(&lifted, &simplex, vol, bary) {
                    cells.insert(cell.into_iter().map(|p| P2::new(p.y, p.z)).collect::<Vec<_>>());
                }
            }
        }
    }
    cells.into_iter().collect()
}

/// Points on the affine function through the lifted simplex, provided no
/// point lies above it.
fn support<const K: usize>(
    points: &[(P3, BigInt)],
    simplex: &[usize; K],
    vol: i64,
    bary: impl Fn(P3) -> [i64; K],
) -> Option<Vec<P3>> {
    let sign = BigInt::from(vol.signum());
    let mut on = Vec::new();
    for (p, h) in points {
        let w = bary(*p);
        let mut excess: BigInt = h * BigInt::from(vol);
        for (k, &i) in simplex.iter().enumerate() {
            excess -= &points[i].1 * BigInt::from(w[k]);
        }
        excess *= &sign;
        if excess.is_positive() {
            return None;
        }
        if excess.is_zero() {
            on.push(*p);
        }
    }
    Some(on)
}
