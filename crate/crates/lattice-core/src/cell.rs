use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::hull::{affine_dim, faces, normalized_volume, Hull};
use crate::point::{lattice_length3, LatticePoint3 as P3};
use crate::LatticeError;

/// A cell of a lattice subdivision, stored by its (sorted, deduplicated) points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<P3>", into = "Vec<P3>")]
pub struct Cell {
    points: Vec<P3>,
}

impl Cell {
    pub fn new(points: impl IntoIterator<Item = P3>) -> Cell {
        Cell { points: points.into_iter().collect::<BTreeSet<_>>().into_iter().collect() }
    }

    pub fn points(&self) -> &[P3] {
        &self.points
    }

    pub fn dim(&self) -> i32 {
        affine_dim(&self.points)
    }

    pub fn hull(&self) -> Hull {
        Hull::new(&self.points)
    }

    pub fn vertices(&self) -> Vec<P3> {
        self.hull().extreme_points()
    }

    pub fn lattice_points(&self) -> Vec<P3> {
        self.hull().lattice_points()
    }

    pub fn volume(&self) -> i64 {
        normalized_volume(&self.points)
    }

    pub fn contains_all(&self, pts: &[P3]) -> bool {
        pts.iter().all(|p| self.points.binary_search(p).is_ok())
    }

    /// Edges of the cell as pairs of vertices.
    pub fn edges(&self) -> Vec<(P3, P3)> {
        faces(&self.points)
            .into_iter()
            .filter(|f| affine_dim(f) == 1)
            .map(|f| {
                let v = Hull::new(&f).extreme_points();
                (v[0], v[v.len() - 1])
            })
            .collect()
    }

    pub fn translate(&self, t: P3) -> Cell {
        Cell::new(self.points.iter().map(|&p| p + t))
    }
}

impl From<Vec<P3>> for Cell {
    fn from(v: Vec<P3>) -> Self {
        Cell::new(v)
    }
}

impl From<Cell> for Vec<P3> {
    fn from(c: Cell) -> Self {
        c.points
    }
}

/// Shapes of node complexes that fail to give a separated node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplexShape {
    /// A triangular prism cell between two floors.
    Prism,
    /// One cell holding two edges of lattice length two.
    SharedWeightTwo,
    /// An edge of lattice length three.
    WeightThree,
    /// Two cells over a common trapezoid.
    Trapezoid,
    /// A cell over a parallelogram that is not a bipyramid half.
    SquareCone,
    /// A five-vertex cell that also contains an edge of lattice length two.
    CircuitOverWeightTwo,
}

impl ComplexShape {
    pub const ALL: [ComplexShape; 6] = [
        ComplexShape::Prism,
        ComplexShape::SharedWeightTwo,
        ComplexShape::WeightThree,
        ComplexShape::Trapezoid,
        ComplexShape::SquareCone,
        ComplexShape::CircuitOverWeightTwo,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ComplexShape::Prism => "prism",
            ComplexShape::SharedWeightTwo => "shared-weight-two",
            ComplexShape::WeightThree => "weight-three",
            ComplexShape::Trapezoid => "trapezoid",
            ComplexShape::SquareCone => "square-cone",
            ComplexShape::CircuitOverWeightTwo => "circuit-over-weight-two",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircuitClass {
    PentatopeA,
    BipyramidD,
    WeightTwoE,
    Unseparated(ComplexShape),
    None,
}

impl CircuitClass {
    pub fn is_node(self) -> bool {
        matches!(self, CircuitClass::PentatopeA | CircuitClass::BipyramidD | CircuitClass::WeightTwoE)
    }
}

impl fmt::Display for CircuitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitClass::PentatopeA => f.write_str("PentatopeA"),
            CircuitClass::BipyramidD => f.write_str("BipyramidD"),
            CircuitClass::WeightTwoE => f.write_str("WeightTwoE"),
            CircuitClass::Unseparated(s) => write!(f, "Unseparated({})", s.tag()),
            CircuitClass::None => f.write_str("None"),
        }
    }
}

impl FromStr for CircuitClass {
    type Err = LatticeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let class = match s {
            "PentatopeA" => CircuitClass::PentatopeA,
            "BipyramidD" => CircuitClass::BipyramidD,
            "WeightTwoE" => CircuitClass::WeightTwoE,
            "None" => CircuitClass::None,
            _ => {
                let tag = s
                    .strip_prefix("Unseparated(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| LatticeError::UnknownClass(s.to_string()))?;
                let shape = ComplexShape::ALL
                    .into_iter()
                    .find(|c| c.tag() == tag)
                    .ok_or_else(|| LatticeError::UnknownClass(s.to_string()))?;
                CircuitClass::Unseparated(shape)
            }
        };
        Ok(class)
    }
}

impl Serialize for CircuitClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CircuitClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of cells together with their circuit class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeComplex {
    pub cells: Vec<Cell>,
    pub class: CircuitClass,
}

impl PolytopeComplex {
    /// Build and classify.
    pub fn classified(cells: impl IntoIterator<Item = Cell>) -> Result<PolytopeComplex, LatticeError> {
        let mut c = PolytopeComplex::unclassified(cells);
        c.class = classify_circuit(&c)?;
        Ok(c)
    }

    pub fn unclassified(cells: impl IntoIterator<Item = Cell>) -> PolytopeComplex {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        PolytopeComplex { cells: cells.into_iter().collect(), class: CircuitClass::None }
    }

    pub fn translate(&self, t: P3) -> PolytopeComplex {
        PolytopeComplex::unclassified(self.cells.iter().map(|c| c.translate(t)))
    }

    fn solids(&self) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.dim() == 3).collect()
    }
}

/// Check the polyhedral-complex property: any two cells meet in a common face.
pub fn validate_complex(c: &PolytopeComplex) -> Result<(), LatticeError> {
    let face_sets: Vec<BTreeSet<Vec<P3>>> = c.cells.iter().map(|x| faces(x.points())).collect();
    for i in 0..c.cells.len() {
        for j in i + 1..c.cells.len() {
            let (a, b) = (&c.cells[i], &c.cells[j]);
            if crate::intersect::interiors_overlap(a, b) {
                return Err(LatticeError::MalformedComplex(format!("cells {i} and {j} overlap")));
            }
            let shared: Vec<P3> = a.points().iter().copied().filter(|p| b.points().contains(p)).collect();
            if shared.is_empty() {
                continue;
            }
            if !face_sets[i].contains(&shared) || !face_sets[j].contains(&shared) {
                return Err(LatticeError::MalformedComplex(format!(
                    "cells {i} and {j} do not meet in a common face"
                )));
            }
        }
    }
    Ok(())
}

fn no_four_coplanar(pts: &[P3]) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if affine_dim(&[pts[i], pts[j], pts[k], pts[l]]) < 3 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn is_parallelogram(q: &[P3]) -> bool {
    if q.len() != 4 || affine_dim(q) != 2 {
        return false;
    }
    let [a, b, c, d] = [q[0], q[1], q[2], q[3]];
    a + d == b + c || a + c == b + d || a + b == c + d
}

fn is_trapezoid(q: &[P3]) -> bool {
    if q.len() != 4 || affine_dim(q) != 2 || is_parallelogram(q) {
        return false;
    }
    let v = Hull::new(q).extreme_points();
    if v.len() != 4 {
        return false;
    }
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    pairs.iter().any(|&(i, j)| {
        let (k, l) = match (i, j) {
            (0, 1) => (2, 3),
            (0, 2) => (1, 3),
            (0, 3) => (1, 2),
            (1, 2) => (0, 3),
            (1, 3) => (0, 2),
            _ => (0, 1),
        };
        (q[j] - q[i]).cross(q[l] - q[k]).is_zero()
    })
}

fn long_edges(cell: &Cell, len: i64) -> Vec<(P3, P3)> {
    cell.edges().into_iter().filter(|&(a, b)| lattice_length3(a, b) == len).collect()
}

/// Recognize the node circuit carried by a complex.
pub fn classify_circuit(c: &PolytopeComplex) -> Result<CircuitClass, LatticeError> {
    validate_complex(c)?;
    let solids = c.solids();
    if solids.is_empty() {
        return Ok(CircuitClass::None);
    }

    if let [cell] = solids.as_slice() {
        let lp = cell.lattice_points();
        if lp.len() == 5 && cell.vertices().len() == 5 && no_four_coplanar(&lp) {
            return Ok(CircuitClass::PentatopeA);
        }
    }

    // two pyramids on a common facet lie on opposite sides of it, so the
    // parallelogram is interior to their union
    if let [a, b] = solids.as_slice() {
        let shared: Vec<P3> = a.points().iter().copied().filter(|p| b.points().contains(p)).collect();
        let pyramid = |x: &Cell| x.lattice_points().len() == 5 && x.vertices().len() == 5;
        if pyramid(a)
            && pyramid(b)
            && is_parallelogram(&shared)
            && Hull::new(&shared).lattice_points().len() == 4
        {
            return Ok(CircuitClass::BipyramidD);
        }
    }

    let doubled: BTreeSet<(P3, P3)> = solids.iter().flat_map(|x| long_edges(x, 2)).collect();
    if solids.len() >= 2 && doubled.len() == 1 {
        let (p, q) = *doubled.iter().next().unwrap();
        let tetrahedra = solids.iter().filter(|x| x.vertices().len() == 4).count();
        if solids.iter().all(|x| x.contains_all(&[p, q])) && tetrahedra >= 2 {
            return Ok(CircuitClass::WeightTwoE);
        }
    }

    Ok(match unseparated_shape(&solids) {
        Some(s) => CircuitClass::Unseparated(s),
        None => CircuitClass::None,
    })
}

fn unseparated_shape(solids: &[&Cell]) -> Option<ComplexShape> {
    if solids.iter().any(|x| !long_edges(x, 3).is_empty()) {
        return Some(ComplexShape::WeightThree);
    }
    if solids.iter().any(|x| long_edges(x, 2).len() >= 2) {
        return Some(ComplexShape::SharedWeightTwo);
    }
    for x in solids {
        let v = x.vertices();
        if v.len() == 6 {
            let tri: Vec<Vec<P3>> = x.hull().facets().into_iter().filter(|f| f.len() == 3).collect();
            let parallel = tri.iter().enumerate().any(|(i, s)| {
                tri[i + 1..].iter().any(|t| {
                    let shift = t[0] - s[0];
                    t.iter().zip(s).all(|(&p, &q)| p - q == shift)
                })
            });
            if parallel {
                return Some(ComplexShape::Prism);
            }
        }
    }
    for x in solids {
        let with_square =
            x.hull().facets().into_iter().any(|f| is_parallelogram(&f) && Hull::new(&f).lattice_points().len() == 4);
        if with_square && x.vertices().len() == 6 {
            return Some(ComplexShape::SquareCone);
        }
    }
    for (i, a) in solids.iter().enumerate() {
        for b in &solids[i + 1..] {
            let shared: Vec<P3> = a.points().iter().copied().filter(|p| b.points().contains(p)).collect();
            if is_trapezoid(&shared) {
                return Some(ComplexShape::Trapezoid);
            }
        }
    }
    if solids.iter().any(|x| x.vertices().len() == 5 && !long_edges(x, 2).is_empty()) {
        return Some(ComplexShape::CircuitOverWeightTwo);
    }
    None
}
