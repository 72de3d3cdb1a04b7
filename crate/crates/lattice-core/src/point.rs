use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::LatticeError;

/// A point of the plane lattice, used for floor subdivisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint2 {
    pub x: i64,
    pub y: i64,
}

/// A point of the space lattice, used for surface subdivisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct LatticePoint3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint2 {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint2 { x, y }
    }

    /// Lift into the plane `x = slice` of space.
    pub const fn lift(self, slice: i64) -> LatticePoint3 {
        LatticePoint3::new(slice, self.x, self.y)
    }
}

impl LatticePoint3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint3 { x, y, z }
    }

    pub fn dot(self, o: LatticePoint3) -> i64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: LatticePoint3) -> LatticePoint3 {
        LatticePoint3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    pub fn scale(self, k: i64) -> LatticePoint3 {
        LatticePoint3::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn coords(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[i64; 2]> for LatticePoint2 {
    fn from(a: [i64; 2]) -> Self {
        LatticePoint2::new(a[0], a[1])
    }
}

impl From<LatticePoint2> for [i64; 2] {
    fn from(p: LatticePoint2) -> Self {
        [p.x, p.y]
    }
}

impl From<[i64; 3]> for LatticePoint3 {
    fn from(a: [i64; 3]) -> Self {
        LatticePoint3::new(a[0], a[1], a[2])
    }
}

impl From<LatticePoint3> for [i64; 3] {
    fn from(p: LatticePoint3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl Add for LatticePoint2 {
    type Output = LatticePoint2;
    fn add(self, o: Self) -> Self {
        LatticePoint2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint2 {
    type Output = LatticePoint2;
    fn sub(self, o: Self) -> Self {
        LatticePoint2::new(self.x - o.x, self.y - o.y)
    }
}

impl Add for LatticePoint3 {
    type Output = LatticePoint3;
    fn add(self, o: Self) -> Self {
        LatticePoint3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for LatticePoint3 {
    type Output = LatticePoint3;
    fn sub(self, o: Self) -> Self {
        LatticePoint3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl fmt::Display for LatticePoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for LatticePoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Lattice points of the triangle `conv{(0,0), (d,0), (0,d)}`.
///
/// Sorted by `x`, then `y`: this is also the order in which a floor's
/// lattice path visits them.
pub fn triangle_points(d: i64) -> Result<Vec<LatticePoint2>, LatticeError> {
    if d < 1 {
        return Err(LatticeError::InvalidDegree(d));
    }
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for x in 0..=d {
        for y in 0..=d - x {
            out.push(LatticePoint2::new(x, y));
        }
    }
    Ok(out)
}

/// Lattice points of the `d`-fold dilated standard tetrahedron.
pub fn simplex_points(d: i64) -> Result<Vec<LatticePoint3>, LatticeError> {
    if d < 1 {
        return Err(LatticeError::InvalidDegree(d));
    }
    let mut out = Vec::new();
    for x in 0..=d {
        for y in 0..=d - x {
            for z in 0..=d - x - y {
                out.push(LatticePoint3::new(x, y, z));
            }
        }
    }
    Ok(out)
}

/// Lattice length of the segment `a`-`b`: the gcd of the coordinate differences.
pub fn lattice_length2(a: LatticePoint2, b: LatticePoint2) -> i64 {
    gcd((a.x - b.x).abs(), (a.y - b.y).abs())
}

pub fn lattice_length3(a: LatticePoint3, b: LatticePoint3) -> i64 {
    let d = a - b;
    gcd(gcd(d.x.abs(), d.y.abs()), d.z.abs())
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
