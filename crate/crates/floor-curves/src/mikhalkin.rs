//! Points in Mikhalkin position and the heights they force on a floor.

use std::collections::BTreeMap;

use lattice_core::LatticePoint2 as P2;
use num::{BigInt, BigRational, One, Zero};

pub type Q = BigRational;

/// Point configuration on the line `lambda * (1, eta, eta^2)`, with
/// `lambda = spacing^j` for the `j`-th point (starting at 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regime {
    pub eta: Q,
    pub spacing: Q,
}

impl Regime {
    pub fn new(eta: Q, spacing: Q) -> Regime {
        Regime { eta, spacing }
    }

    /// `eta = 1/64`, `spacing = 2^20`: deep enough that every census plan
    /// realizes.
    pub fn canonical() -> Regime {
        Regime::new(Q::new(1.into(), 64.into()), Q::from_integer(BigInt::from(1u64 << 20)))
    }

    pub fn lambda(&self, j: usize) -> Q {
        num::pow(self.spacing.clone(), j)
    }

    /// Full point `lambda_j * (1, eta, eta^2)`.
    pub fn point(&self, j: usize) -> [Q; 3] {
        let l = self.lambda(j);
        let e2 = self.eta.clone() * self.eta.clone();
        [l.clone(), l.clone() * self.eta.clone(), l * e2]
    }

    /// Projection of the `j`-th point to the `(y, z)`-plane of the floors.
    pub fn projection(&self, j: usize) -> (Q, Q) {
        let [_, y, z] = self.point(j);
        (y, z)
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `h(p) + p . w`, the value of monomial `p` at `w`.
pub fn monomial(h: &Q, p: P2, w: &(Q, Q)) -> Q {
    h + &w.0 * q(p.x) + &w.1 * q(p.y)
}

/// Monomials attaining the maximum of the tropical polynomial at `w`.
pub fn argmax(heights: &BTreeMap<P2, Q>, w: &(Q, Q)) -> Vec<P2> {
    let mut best: Option<Q> = None;
    let mut arg = Vec::new();
    for (&p, h) in heights {
        let v = monomial(h, p, w);
        match &best {
            Some(b) if &v < b => {}
            Some(b) if &v == b => arg.push(p),
            _ => {
                best = Some(v);
                arg = vec![p];
            }
        }
    }
    arg
}

/// Heights along a lattice path so that the `j`-th edge is dual to an edge of
/// the tropical curve through `points[j]`.
pub fn path_heights(path: &[P2], points: &[(Q, Q)]) -> BTreeMap<P2, Q> {
    let mut h = BTreeMap::new();
    if let Some(&first) = path.first() {
        h.insert(first, Q::zero());
    }
    for (j, pair) in path.windows(2).enumerate() {
        let (u, v) = (pair[0], pair[1]);
        let w = &points[j];
        let hv = h[&u].clone() + &w.0 * q(u.x - v.x) + &w.1 * q(u.y - v.y);
        h.insert(v, hv);
    }
    h
}

/// Scale heights to integers with a common denominator, for hull computations.
pub fn integral(heights: &BTreeMap<P2, Q>) -> Vec<(P2, BigInt)> {
    let mut den = BigInt::one();
    for h in heights.values() {
        den = num::integer::lcm(den, h.denom().clone());
    }
    heights
        .iter()
        .map(|(&p, h)| {
            let v = h * Q::from_integer(den.clone());
            (p, v.to_integer())
        })
        .collect()
}
