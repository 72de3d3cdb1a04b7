//! Exact realization of a floor plan through points on a stretched line.

use std::collections::BTreeMap;

use floor_curves::mikhalkin::{monomial, path_heights, q};
use floor_curves::realize::complete_heights;
use floor_curves::{FloorError, Orientation, Regime, Q};
use lattice_core::{LatticePoint2 as P2, LatticePoint3 as P3};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::plan::{Alignment, AlignmentTarget, FloorPlan};
use crate::EngineError;

/// Heights of all four slices of the cubic simplex, with floor offsets applied
/// only in [`SurfaceRealization::height3`].
#[derive(Clone, Debug)]
pub struct SurfaceRealization {
    pub regime: Regime,
    /// Heights per slice `x = 0..=3`, before offsets.
    pub floors: [BTreeMap<P2, Q>; 4],
    pub offsets: [Q; 4],
    /// The points, `points[j - 1]` being the `j`-th.
    pub points: Vec<[Q; 3]>,
    /// The two monomials that should tie at each point.
    pub expected: Vec<[P3; 2]>,
}

impl SurfaceRealization {
    pub fn height3(&self, p: P3) -> Option<Q> {
        let s = usize::try_from(p.x).ok()?;
        Some(self.floors.get(s)?.get(&P2::new(p.y, p.z))? + &self.offsets[s])
    }

    /// Lifted heights of every lattice point of the cubic simplex.
    pub fn heights3(&self) -> Vec<(P3, Q)> {
        let mut out = Vec::new();
        for (s, f) in self.floors.iter().enumerate() {
            for (&p, h) in f {
                out.push((p.lift(s as i64), h + &self.offsets[s]));
            }
        }
        out
    }

    /// Monomials attaining the maximum at a point of space.
    pub fn argmax3(&self, w: &[Q; 3]) -> Vec<P3> {
        let mut best: Option<Q> = None;
        let mut arg = Vec::new();
        for (p, h) in self.heights3() {
            let v = h + &w[0] * q(p.x) + &w[1] * q(p.y) + &w[2] * q(p.z);
            match &best {
                Some(b) if &v < b => {}
                Some(b) if &v == b => arg.push(p),
                _ => {
                    best = Some(v);
                    arg = vec![p];
                }
            }
        }
        arg.sort();
        arg
    }
}

/// Line constant of the tropical edge dual to `a`-`b`: the `z` of a
/// horizontal edge, or `y - z` of a diagonal one.
pub fn line_constant(h: &BTreeMap<P2, Q>, a: P2, b: P2, o: Orientation) -> Option<Q> {
    let (a, b) = if (a.x, a.y) <= (b.x, b.y) { (a, b) } else { (b, a) };
    let (ha, hb) = (h.get(&a)?, h.get(&b)?);
    Some(match o {
        Orientation::Horizontal => (ha - hb) / q(b.y - a.y),
        Orientation::Diagonal => (ha - hb) / q(b.x - a.x),
    })
}

/// A point of the line with parameter `y`.
fn on_line(o: Orientation, c: &Q, y: &Q) -> (Q, Q) {
    match o {
        Orientation::Horizontal => (y.clone(), c.clone()),
        Orientation::Diagonal => (y.clone(), y - c),
    }
}

/// Closed `y`-interval where the edge dual to `a`-`b` lies on its line, or
/// `None` if it is empty. Unbounded sides are `None`.
pub type Interval = (Option<Q>, Option<Q>);

pub fn edge_interval(h: &BTreeMap<P2, Q>, a: P2, b: P2, o: Orientation) -> Option<Interval> {
    let c = line_constant(h, a, b, o)?;
    let (w0, w1) = (on_line(o, &c, &Q::zero()), on_line(o, &c, &q(1)));
    let ha = h.get(&a)?;
    let (mut lo, mut hi): Interval = (None, None);
    for (&r, hr) in h {
        // f(y) = alpha + beta y >= 0
        let alpha = monomial(ha, a, &w0) - monomial(hr, r, &w0);
        let beta = monomial(ha, a, &w1) - monomial(hr, r, &w1) - &alpha;
        if beta.is_zero() {
            if alpha.is_negative() {
                return None;
            }
        } else {
            let root = -&alpha / &beta;
            if beta.is_positive() {
                lo = Some(lo.map_or(root.clone(), |l: Q| l.max(root)));
            } else {
                hi = Some(hi.map_or(root.clone(), |u: Q| u.min(root)));
            }
        }
    }
    match (&lo, &hi) {
        (Some(l), Some(u)) if l > u => None,
        _ => Some((lo, hi)),
    }
}

/// Interior overlap of two intervals.
pub fn overlap(a: &Interval, b: &Interval) -> bool {
    let lo = match (&a.0, &b.0) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.as_ref().or(y.as_ref()),
    };
    let hi = match (&a.1, &b.1) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.as_ref().or(y.as_ref()),
    };
    match (lo, hi) {
        (Some(l), Some(u)) => l < u,
        _ => true,
    }
}

/// Vertex of the tropical curve dual to a cell.
pub fn vertex_of(h: &BTreeMap<P2, Q>, cell: &[P2]) -> Option<(Q, Q)> {
    let c0 = *cell.first()?;
    for i in 1..cell.len() {
        for j in i + 1..cell.len() {
            let (u, v) = (cell[i] - c0, cell[j] - c0);
            let det = u.x * v.y - u.y * v.x;
            if det == 0 {
                continue;
            }
            let r1 = h.get(&c0)? - h.get(&cell[i])?;
            let r2 = h.get(&c0)? - h.get(&cell[j])?;
            let y = (&r1 * q(v.y) - &r2 * q(u.y)) / q(det);
            let z = (&r2 * q(u.x) - &r1 * q(v.x)) / q(det);
            return Some((y, z));
        }
    }
    None
}

fn orientation_of(a: &Alignment) -> Orientation {
    if a.is_left() {
        Orientation::Horizontal
    } else {
        Orientation::Diagonal
    }
}

/// Line constant that the aligned end must take, read off the target floor.
fn target_constant(a: &Alignment, target: &BTreeMap<P2, Q>) -> Option<Q> {
    let o = orientation_of(a);
    match &a.target {
        AlignmentTarget::Edge(e) => line_constant(target, e.dual_edge.0, e.dual_edge.1, o),
        AlignmentTarget::Vertex(v) => {
            let (y, z) = vertex_of(target, &v.cell)?;
            Some(match o {
                Orientation::Horizontal => z,
                Orientation::Diagonal => y - z,
            })
        }
        AlignmentTarget::End(e) => line_constant(target, e.free, e.anchor, o),
    }
}

/// Projected points of each floor.
pub fn floor_points(plan: &FloorPlan, regime: &Regime) -> Result<[Vec<(Q, Q)>; 3], EngineError> {
    let layout = plan.point_layout()?;
    Ok(layout.map(|r| r.map(|j| regime.projection(j)).collect()))
}

/// Exact heights of the three floors, solving alignments in dependency order.
pub fn floor_heights(plan: &FloorPlan, regime: &Regime) -> Result<[BTreeMap<P2, Q>; 3], EngineError> {
    let pts = floor_points(plan, regime)?;
    let mut maps: [BTreeMap<P2, Q>; 3] = [0, 1, 2].map(|s| path_heights(&plan.curves[s].path, &pts[s]));
    let mut done = [false; 3];
    for _round in 0..6 {
        for s in 0..3 {
            if done[s] {
                continue;
            }
            let f = &plan.curves[s];
            let mut own = std::mem::take(&mut maps[s]);
            let others = &maps;
            let res = complete_heights(f.degree, &f.omissions, &mut own, |p, own| {
                let a = plan.alignments.iter().find(|a| a.source_degree == f.degree && a.end.free == p)?;
                let t = &others[(3 - a.target_degree) as usize];
                let c = target_constant(a, t)?;
                let ha = own.get(&a.end.anchor)?;
                let w = q(a.end.weight);
                Some(if a.is_left() { ha + w * c } else { ha - w * c })
            });
            maps[s] = own;
            match res {
                Ok(()) => done[s] = true,
                Err(FloorError::Unresolvable(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(maps);
        }
    }
    Err(EngineError::Unresolved(format!("heights of plan {}", plan.id)))
}

fn max_value(h: &BTreeMap<P2, Q>, w: &(Q, Q)) -> (Q, Vec<P2>) {
    let arg = floor_curves::mikhalkin::argmax(h, w);
    let v = monomial(&h[&arg[0]], arg[0], w);
    (v, arg)
}

/// Realize the plan: floor heights, offsets from the step points, and the
/// monomials each point should sit between.
pub fn realize(plan: &FloorPlan, regime: &Regime) -> Result<SurfaceRealization, EngineError> {
    let layout = plan.point_layout()?;
    let [f0, f1, f2] = floor_heights(plan, regime)?;
    let floors = [f0, f1, f2, BTreeMap::from([(P2::new(0, 0), Q::zero())])];
    let n = layout[2].end;
    let points: Vec<[Q; 3]> = (1..=n).map(|j| regime.point(j)).collect();
    let mut offsets = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
    let mut expected = vec![[P3::new(0, 0, 0); 2]; n];
    for s in 0..3 {
        let path = &plan.curves[s].path;
        for (k, j) in layout[s].clone().enumerate() {
            expected[j - 1] = [path[k].lift(s as i64), path[k + 1].lift(s as i64)];
        }
        let t = layout[s].end;
        let [x, y, z] = regime.point(t);
        let w = (y, z);
        let (va, aa) = max_value(&floors[s], &w);
        let (vb, ab) = max_value(&floors[s + 1], &w);
        offsets[s + 1] = &offsets[s] + va - vb - x;
        expected[t - 1] = [aa[0].lift(s as i64), ab[0].lift(s as i64 + 1)];
    }
    for e in &mut expected {
        e.sort();
    }
    Ok(SurfaceRealization { regime: regime.clone(), floors, offsets, points, expected })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointWitness {
    pub index: usize,
    pub coords: [String; 3],
    pub expected: [P3; 2],
    pub found: Vec<P3>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceWitness {
    pub alignment: Alignment,
    /// Line constant of the string end.
    pub line: Option<String>,
    /// Parameter interval of the end.
    pub end_interval: Option<(Option<String>, Option<String>)>,
    /// Parameter interval of the target edge, or the vertex parameter.
    pub target_interval: Option<(Option<String>, Option<String>)>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub plan: String,
    pub eta: String,
    pub spacing: String,
    pub passed: bool,
    pub points: Vec<PointWitness>,
    pub incidences: Vec<IncidenceWitness>,
    pub failure: Option<String>,
}

fn show(i: &Interval) -> (Option<String>, Option<String>) {
    (i.0.as_ref().map(|x| x.to_string()), i.1.as_ref().map(|x| x.to_string()))
}

fn incidence(r: &SurfaceRealization, a: &Alignment) -> IncidenceWitness {
    let o = orientation_of(a);
    let src = &r.floors[(3 - a.source_degree) as usize];
    let tgt = &r.floors[(3 - a.target_degree) as usize];
    let line = line_constant(src, a.end.free, a.end.anchor, o);
    let end = edge_interval(src, a.end.free, a.end.anchor, o);
    let mut w = IncidenceWitness {
        alignment: a.clone(),
        line: line.as_ref().map(|c| c.to_string()),
        end_interval: end.as_ref().map(show),
        target_interval: None,
        ok: false,
    };
    let (Some(c), Some(end)) = (line, end) else { return w };
    match &a.target {
        AlignmentTarget::Edge(e) => {
            let (p, p2) = e.dual_edge;
            if line_constant(tgt, p, p2, o).as_ref() != Some(&c) {
                return w;
            }
            if let Some(t) = edge_interval(tgt, p, p2, o) {
                w.target_interval = Some(show(&t));
                w.ok = overlap(&end, &t);
            }
        }
        AlignmentTarget::End(e) => {
            if let Some(t) = edge_interval(tgt, e.free, e.anchor, o) {
                w.target_interval = Some(show(&t));
                w.ok = line_constant(tgt, e.free, e.anchor, o).as_ref() == Some(&c) && overlap(&end, &t);
            }
        }
        AlignmentTarget::Vertex(v) => {
            let Some((y, z)) = vertex_of(tgt, &v.cell) else { return w };
            let mut at = floor_curves::mikhalkin::argmax(tgt, &(y.clone(), z.clone()));
            at.sort();
            let on_line = on_line(o, &c, &y) == (y.clone(), z.clone());
            let inside = end.0.as_ref().is_none_or(|l| l <= &y) && end.1.as_ref().is_none_or(|u| &y <= u);
            w.target_interval = Some((Some(y.to_string()), Some(y.to_string())));
            w.ok = at == v.cell && on_line && inside;
        }
    }
    w
}

/// Check a realization: every point between exactly its two monomials,
/// every alignment an actual incidence.
pub fn check(plan: &FloorPlan, r: &SurfaceRealization) -> RealizationReport {
    let points: Vec<PointWitness> = r
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let found = r.argmax3(p);
            PointWitness {
                index: i + 1,
                coords: [p[0].to_string(), p[1].to_string(), p[2].to_string()],
                expected: r.expected[i],
                ok: found == r.expected[i],
                found,
            }
        })
        .collect();
    let incidences: Vec<IncidenceWitness> = plan.alignments.iter().map(|a| incidence(r, a)).collect();
    let bad_point = points.iter().find(|p| !p.ok);
    let bad_inc = incidences.iter().find(|i| !i.ok);
    let failure = match (bad_point, bad_inc) {
        (Some(p), _) => Some(format!("point {} lies on {:?}, not {:?}", p.index, p.found, p.expected)),
        (None, Some(i)) => Some(format!(
            "string end at {} does not meet its target in the floor of degree {}",
            i.alignment.end.free, i.alignment.target_degree
        )),
        _ => None,
    };
    RealizationReport {
        plan: plan.id.clone(),
        eta: r.regime.eta.to_string(),
        spacing: r.regime.spacing.to_string(),
        passed: failure.is_none(),
        points,
        incidences,
        failure,
    }
}

/// Realize a plan at the given regime and report on every incidence.
/// Failures to realize are reported, not raised.
pub fn realize_numeric(plan: &FloorPlan, eta: Q, spacing: Q) -> Result<RealizationReport, EngineError> {
    if let Some(crate::SeparationVerdict::Eliminated { rule, .. }) = crate::rules::apply_eliminations(plan) {
        return Err(EngineError::Eliminated { plan: plan.id.clone(), rule: rule.tag().to_string() });
    }
    if !eta.is_positive() || spacing <= q(1) {
        return Err(EngineError::BadRegime);
    }
    let regime = Regime::new(eta, spacing);
    Ok(match realize(plan, &regime) {
        Ok(r) => check(plan, &r),
        Err(e) => RealizationReport {
            plan: plan.id.clone(),
            eta: regime.eta.to_string(),
            spacing: regime.spacing.to_string(),
            passed: false,
            points: Vec::new(),
            incidences: Vec::new(),
            failure: Some(e.to_string()),
        },
    })
}
