//! Convex hulls of small lattice point sets in space.
//!
//! Everything here is exact integer arithmetic. The point sets are tiny
//! (a cell of a cubic surface subdivision has at most a dozen lattice
//! points), so the algorithms favour clarity over asymptotics.

use std::collections::BTreeSet;

use crate::point::{gcd, LatticePoint3 as P3};

/// H-representation of `conv(points)` inside its affine hull.
#[derive(Clone, Debug)]
pub struct Hull {
    points: Vec<P3>,
    dim: i32,
    eqs: Vec<(P3, i64)>,
    ineqs: Vec<(P3, i64)>,
}

const E: [P3; 3] = [P3::new(1, 0, 0), P3::new(0, 1, 0), P3::new(0, 0, 1)];

/// Up to three linearly independent difference vectors spanning the affine hull.
pub fn affine_basis(points: &[P3]) -> Vec<P3> {
    let mut basis: Vec<P3> = Vec::new();
    let Some(&p0) = points.first() else {
        return basis;
    };
    for &p in &points[1..] {
        let d = p - p0;
        let independent = match basis.len() {
            0 => !d.is_zero(),
            1 => !basis[0].cross(d).is_zero(),
            2 => basis[0].cross(basis[1]).dot(d) != 0,
            _ => false,
        };
        if independent {
            basis.push(d);
        }
    }
    basis
}

/// Affine dimension of a point set, `-1` for the empty set.
pub fn affine_dim(points: &[P3]) -> i32 {
    if points.is_empty() {
        -1
    } else {
        affine_basis(points).len() as i32
    }
}

fn normalize(n: P3, c: i64) -> (P3, i64) {
    let g = gcd(gcd(gcd(n.x.abs(), n.y.abs()), n.z.abs()), c.abs()).max(1);
    (P3::new(n.x / g, n.y / g, n.z / g), c / g)
}

/// Orthogonal complement of the direction space of the affine hull.
pub(crate) fn complement_normals(basis: &[P3]) -> Vec<P3> {
    match basis.len() {
        0 => E.to_vec(),
        1 => {
            let mut out: Vec<P3> = Vec::new();
            for e in E {
                let n = basis[0].cross(e);
                if n.is_zero() {
                    continue;
                }
                if out.is_empty() || !out[0].cross(n).is_zero() {
                    out.push(n);
                }
                if out.len() == 2 {
                    break;
                }
            }
            out
        }
        2 => vec![basis[0].cross(basis[1])],
        _ => Vec::new(),
    }
}

impl Hull {
    pub fn new(points: &[P3]) -> Hull {
        let pts: Vec<P3> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let basis = affine_basis(&pts);
        let dim = if pts.is_empty() { -1 } else { basis.len() as i32 };
        let mut eqs = Vec::new();
        let mut ineqs: BTreeSet<(P3, i64)> = BTreeSet::new();
        if let Some(&p0) = pts.first() {
            for n in complement_normals(&basis) {
                eqs.push((n, n.dot(p0)));
            }
            let mut push_support = |n: P3, anchor: P3| {
                if n.is_zero() {
                    return;
                }
                let c = n.dot(anchor);
                let (mut le, mut ge) = (true, true);
                for &p in &pts {
                    let v = n.dot(p);
                    le &= v <= c;
                    ge &= v >= c;
                }
                if le && !ge {
                    ineqs.insert(normalize(n, c));
                } else if ge && !le {
                    ineqs.insert(normalize(n.scale(-1), -c));
                }
            };
            match dim {
                3 => {
                    for i in 0..pts.len() {
                        for j in i + 1..pts.len() {
                            for k in j + 1..pts.len() {
                                let n = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
                                push_support(n, pts[i]);
                            }
                        }
                    }
                }
                2 => {
                    let nrm = basis[0].cross(basis[1]);
                    for i in 0..pts.len() {
                        for j in i + 1..pts.len() {
                            push_support(nrm.cross(pts[j] - pts[i]), pts[i]);
                        }
                    }
                }
                1 => {
                    push_support(basis[0], pts[0]);
                    push_support(basis[0].scale(-1), pts[0]);
                    for &p in &pts {
                        push_support(basis[0], p);
                        push_support(basis[0].scale(-1), p);
                    }
                }
                _ => {}
            }
        }
        Hull { points: pts, dim, eqs, ineqs: ineqs.into_iter().collect() }
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn points(&self) -> &[P3] {
        &self.points
    }

    pub fn contains(&self, p: P3) -> bool {
        self.dim >= 0
            && self.eqs.iter().all(|&(n, c)| n.dot(p) == c)
            && self.ineqs.iter().all(|&(n, c)| n.dot(p) <= c)
    }

    /// Point sets of the facets (faces of codimension one within the hull).
    pub fn facets(&self) -> Vec<Vec<P3>> {
        let set: BTreeSet<Vec<P3>> = self
            .ineqs
            .iter()
            .map(|&(n, c)| self.points.iter().copied().filter(|p| n.dot(*p) == c).collect())
            .collect();
        set.into_iter().collect()
    }

    /// Outward facet normals, only meaningful for full-dimensional hulls.
    pub fn facet_normals(&self) -> Vec<P3> {
        self.ineqs.iter().map(|&(n, _)| n).collect()
    }

    /// Points of the input that are vertices of the hull.
    pub fn extreme_points(&self) -> Vec<P3> {
        if self.points.len() <= 1 {
            return self.points.clone();
        }
        self.points
            .iter()
            .copied()
            .filter(|&v| {
                let others: Vec<P3> = self.points.iter().copied().filter(|&p| p != v).collect();
                !Hull::new(&others).contains(v)
            })
            .collect()
    }

    /// All lattice points of the hull, sorted.
    pub fn lattice_points(&self) -> Vec<P3> {
        let Some(&first) = self.points.first() else {
            return Vec::new();
        };
        let (mut lo, mut hi) = (first, first);
        for p in &self.points {
            lo = P3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
            hi = P3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
        }
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                for z in lo.z..=hi.z {
                    let p = P3::new(x, y, z);
                    if self.contains(p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Every nonempty face of `conv(points)`, each given by the input points on it.
///
/// Computed top-down: facets come from supporting hyperplanes, and the
/// recursion continues inside each facet.
pub fn faces(points: &[P3]) -> BTreeSet<Vec<P3>> {
    let mut out = BTreeSet::new();
    collect_faces(&Hull::new(points), &mut out);
    out
}

fn collect_faces(h: &Hull, out: &mut BTreeSet<Vec<P3>>) {
    if h.dim < 0 || !out.insert(h.points.clone()) {
        return;
    }
    for f in h.facets() {
        collect_faces(&Hull::new(&f), out);
    }
}

/// Normalized volume: a unimodular tetrahedron has volume 1.
///
/// Cones from the lowest vertex over every facet not containing it, each
/// facet fanned from its own lowest vertex.
pub fn normalized_volume(points: &[P3]) -> i64 {
    let h = Hull::new(points);
    if h.dim != 3 {
        return 0;
    }
    let v0 = h.extreme_points()[0];
    let mut vol = 0;
    for f in h.facets() {
        if f.contains(&v0) {
            continue;
        }
        let fh = Hull::new(&f);
        let w0 = fh.extreme_points()[0];
        for e in fh.facets() {
            if e.contains(&w0) {
                continue;
            }
            let ends = Hull::new(&e).extreme_points();
            let (a, b) = (ends[0], ends[ends.len() - 1]);
            vol += (w0 - v0).cross(a - v0).dot(b - v0).abs();
        }
    }
    vol
}
