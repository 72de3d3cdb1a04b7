//! Exact heights for a single floor and the checks that make them a valid floor.

use std::collections::{BTreeMap, BTreeSet};

use lattice_core::{upper_cells_2d, LatticePoint2 as P2, Subdivision2};

use crate::germ::{low_runs, Omission, Status};
use crate::mikhalkin::{argmax, integral, q, Q};
use crate::FloorError;

/// For a forced vertex `o` of a parallelogram, the vertex opposite to it and
/// the two neighbours, so that `h(o) = h(a) + h(b) - h(c)`.
pub fn parallelogram_roles(o: P2, quad: &[P2; 4]) -> Option<(P2, P2, P2)> {
    let others: Vec<P2> = quad.iter().copied().filter(|&p| p != o).collect();
    if others.len() != 3 {
        return None;
    }
    for i in 0..3 {
        let c = others[i];
        let (a, b) = (others[(i + 1) % 3], others[(i + 2) % 3]);
        if o + c == a + b {
            return Some((a, b, c));
        }
    }
    None
}

/// Fill in heights of free, forced and low points.
///
/// `free_height` is asked repeatedly for each free point and may answer
/// `None` while the heights it depends on are still missing.
pub fn complete_heights(
    d: i64,
    omissions: &[Omission],
    heights: &mut BTreeMap<P2, Q>,
    mut free_height: impl FnMut(P2, &BTreeMap<P2, Q>) -> Option<Q>,
) -> Result<(), FloorError> {
    let mut pending: Vec<&Omission> = omissions.iter().filter(|o| o.status != Status::Low).collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for o in pending {
            let h = match &o.status {
                Status::Free => free_height(o.point, heights),
                Status::Forced { quad } => {
                    let (a, b, c) = parallelogram_roles(o.point, quad).ok_or(FloorError::NotParallelogram)?;
                    match (heights.get(&a), heights.get(&b), heights.get(&c)) {
                        (Some(ha), Some(hb), Some(hc)) => Some(ha + hb - hc),
                        _ => None,
                    }
                }
                Status::Low => unreachable!(),
            };
            match h {
                Some(h) => {
                    heights.insert(o.point, h);
                }
                None => rest.push(o),
            }
        }
        if rest.len() == before {
            return Err(FloorError::Unresolvable(rest.iter().map(|o| o.point).collect()));
        }
        pending = rest;
    }
    for run in low_runs(d, omissions) {
        let (p, r) = run.ends;
        let (hp, hr) = match (heights.get(&p), heights.get(&r)) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return Err(FloorError::Unresolvable(run.lows.clone())),
        };
        let len = (run.lows.len() + 1) as i64;
        for (t, &m) in run.lows.iter().enumerate() {
            let t = (t + 1) as i64;
            let h = &hp + (&hr - &hp) * Q::new(t.into(), len.into()) - q(1);
            heights.insert(m, h);
        }
    }
    Ok(())
}

/// Check that each projected point lies on the edge dual to its own path
/// step, then compute the subdivision and check the cells are the generic
/// ones the omissions promise.
pub fn check_floor(
    degree: i64,
    path: &[P2],
    omissions: &[Omission],
    heights: &BTreeMap<P2, Q>,
    points: &[(Q, Q)],
) -> Result<Subdivision2, FloorError> {
    for (j, w) in points.iter().enumerate() {
        let mut want = vec![path[j], path[j + 1]];
        want.sort();
        let got = argmax(heights, w);
        if got != want {
            return Err(FloorError::PointCheck { index: j, expected: want, found: got });
        }
    }
    let sub = Subdivision2::new(degree, upper_cells_2d(&integral(heights)));
    let quads: BTreeSet<Vec<P2>> = omissions
        .iter()
        .filter_map(|o| match &o.status {
            Status::Forced { quad } => {
                let mut v = quad.to_vec();
                v.sort();
                Some(v)
            }
            _ => None,
        })
        .collect();
    for c in &sub.cells {
        if c.len() != 3 && !quads.contains(c) {
            return Err(FloorError::NonGeneric(c.clone()));
        }
    }
    for qd in &quads {
        if !sub.cells.contains(qd) {
            return Err(FloorError::MissingParallelogram(qd.clone()));
        }
    }
    let used = sub.vertices();
    for o in omissions {
        if o.status != Status::Low && !used.contains(&o.point) {
            return Err(FloorError::NotAVertex(o.point));
        }
    }
    Ok(sub)
}
