//! Generated catalog of floors through points in Mikhalkin position.
//!
//! A floor of degree `d` with `g` germs leaves `g` lattice points off its
//! path. Each left-off point is tried as low, free or forced by a
//! parallelogram; the floor is kept when some exact height choice realizes
//! it with every projected point on its own path edge.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use lattice_core::{triangle_points, LatticePoint2 as P2, Subdivision2};
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::germ::{derive_germs, ends_of, free_kind, sides_of, GermKind, NodeGerm, Omission, Status};
use crate::mikhalkin::{path_heights, q, Regime, Q};
use crate::realize::{check_floor, complete_heights};
use crate::FloorError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorCurve {
    pub degree: i64,
    /// Stable identifier built from the omissions, e.g. `2-F00.L01`.
    pub tag: String,
    pub label: String,
    pub omissions: Vec<Omission>,
    /// Lattice points visited by the marked path, in order.
    pub path: Vec<P2>,
    pub subdivision: Subdivision2,
    pub germs: Vec<NodeGerm>,
}

impl FloorCurve {
    pub fn germ_count(&self) -> usize {
        self.germs.iter().map(|g| g.nodes()).sum()
    }

    pub fn is_smooth(&self) -> bool {
        self.germs.is_empty()
    }

    pub fn has(&self, kind: GermKind) -> bool {
        self.germs.iter().any(|g| g.kind == kind)
    }

    pub fn status(&self, p: P2) -> Option<&Status> {
        self.omissions.iter().find(|o| o.point == p).map(|o| &o.status)
    }

    /// Dual edges of the marked path.
    pub fn path_edges(&self) -> Vec<(P2, P2)> {
        self.path.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// Number of projected points the floor passes through.
    pub fn point_count(&self) -> usize {
        self.path.len() - 1
    }

    /// Free points with the height rule that the catalog used for them.
    pub fn free_points(&self) -> Vec<P2> {
        self.omissions.iter().filter(|o| o.status == Status::Free).map(|o| o.point).collect()
    }
}

/// Which floor of the cubic surface a degree belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Position {
    Top,
    Middle,
    Bottom,
}

fn position(degree: i64) -> Position {
    match degree {
        3 => Position::Top,
        2 => Position::Middle,
        _ => Position::Bottom,
    }
}

fn tag_of(degree: i64, omissions: &[Omission]) -> String {
    if omissions.is_empty() {
        return degree.to_string();
    }
    let parts: Vec<String> = omissions
        .iter()
        .map(|o| {
            let p = o.point;
            match &o.status {
                Status::Low => format!("L{}{}", p.x, p.y),
                Status::Free => format!("F{}{}", p.x, p.y),
                Status::Forced { quad } => {
                    let (_, _, c) = crate::realize::parallelogram_roles(p, quad).expect("parallelogram");
                    format!("P{}{}x{}{}", p.x, p.y, c.x, c.y)
                }
            }
        })
        .collect();
    format!("{}-{}", degree, parts.join("."))
}

fn label_of(germs: &[NodeGerm]) -> String {
    if germs.is_empty() {
        return "smooth".into();
    }
    germs
        .iter()
        .map(|g| {
            let w = g.weight();
            if g.kind.is_string() && w > 1 {
                format!("weight-{w} {}", g.kind)
            } else {
                g.kind.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Parallelograms with exactly four lattice points, having `o` as a vertex.
fn parallelograms_at(d: i64, o: P2) -> Vec<[P2; 4]> {
    let pts = triangle_points(d).expect("degree checked");
    let mut out = Vec::new();
    for (i, &a) in pts.iter().enumerate() {
        for &b in pts.iter().skip(i + 1) {
            if a == o || b == o {
                continue;
            }
            // o and c opposite: o + c = a + b
            let c = a + b - o;
            if c == o || c == a || c == b || !pts.contains(&c) {
                continue;
            }
            let (u, v) = (a - o, b - o);
            let area = u.x * v.y - u.y * v.x;
            if area.abs() == 1 {
                let mut quad = [o, a, b, c];
                quad.sort();
                out.push(quad);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn strictly_inside_side(d: i64, p: P2) -> bool {
    let s = sides_of(d, p);
    s.len() == 1
}

fn status_options(d: i64, p: P2) -> Vec<Status> {
    let mut out = Vec::new();
    if strictly_inside_side(d, p) {
        out.push(Status::Low);
    }
    out.push(Status::Free);
    for quad in parallelograms_at(d, p) {
        out.push(Status::Forced { quad });
    }
    out
}

fn admissible(position: Position, germs: &[NodeGerm], g: usize, omissions: &[Omission]) -> bool {
    use GermKind::*;
    match (position, g) {
        (Position::Top, 1) => germs.iter().all(|x| matches!(x.kind, RightString | DiagonalWeight2End)),
        (Position::Middle, 1) => germs.iter().all(|x| {
            matches!(
                x.kind,
                ParallelogramVertex | HorizontalWeight2End | DiagonalWeight2End | LeftString | RightString
            )
        }),
        (Position::Bottom, 1) => germs.iter().all(|x| x.kind == LeftString),
        // the top floor only carries right strings and diagonal ends, possibly
        // merged: free points must run along the hypotenuse from the right corner
        (Position::Top, 2) => {
            let d = omissions.first().map_or(0, |o| o.point.x + o.point.y);
            let free: Vec<i64> =
                omissions.iter().filter(|o| o.status == Status::Free).map(|o| o.point.x).collect();
            omissions.iter().all(|o| !matches!(o.status, Status::Forced { .. }))
                && free.iter().all(|&x| (x..=d).all(|y| free.contains(&y)))
        }
        (Position::Middle, 2) => true,
        _ => false,
    }
}

fn omitted_sets(d: i64, g: usize) -> Vec<Vec<P2>> {
    let pts = triangle_points(d).expect("degree checked");
    let pool: Vec<P2> = match (position(d), g) {
        (Position::Top, 2) => pts.into_iter().filter(|p| p.x + p.y == d && p.x > 0).collect(),
        _ => pts,
    };
    match g {
        1 => pool.into_iter().map(|p| vec![p]).collect(),
        2 => {
            let mut out = Vec::new();
            for i in 0..pool.len() {
                for j in i + 1..pool.len() {
                    out.push(vec![pool[i], pool[j]]);
                }
            }
            out
        }
        _ => Vec::new(),
    }
}

/// How the catalog chooses a height for a free point: relative to the next
/// point along its string end, or absolute.
#[derive(Clone, Copy, Debug)]
enum FreeRule {
    /// `h(p) = h(anchor) + w t`: a left end at height `z = t`.
    Left,
    /// `h(p) = h(anchor) - w t`: a right end at `y - z = t`.
    Right,
    Absolute,
}

fn free_rule(d: i64, p: P2) -> FreeRule {
    match free_kind(d, p) {
        GermKind::LeftString => FreeRule::Left,
        GermKind::RightString => FreeRule::Right,
        GermKind::SideString if p.x == 0 => FreeRule::Left,
        _ => FreeRule::Absolute,
    }
}

fn candidate_values(rule: FreeRule, regime: &Regime, n: usize) -> Vec<Q> {
    let scaled: Vec<Q> = (0..=n + 2)
        .flat_map(|e| [1, 3, 5].map(|m| regime.lambda(e) * Q::new(m.into(), 7.into())))
        .collect();
    match rule {
        FreeRule::Left => (0..8).map(q).chain(scaled).collect(),
        FreeRule::Right => {
            let mut v: Vec<Q> = (0..=n + 2).rev().map(|e| regime.lambda(e)).collect();
            v.extend((0..4).map(q));
            v
        }
        FreeRule::Absolute => {
            let mut v = vec![Q::zero()];
            for s in scaled {
                v.push(-s.clone());
                v.push(s);
            }
            v
        }
    }
}

/// Try to realize a floor; returns the subdivision found.
fn realize_standalone(d: i64, omissions: &[Omission], regime: &Regime) -> Option<Subdivision2> {
    let path: Vec<P2> = triangle_points(d)
        .ok()?
        .into_iter()
        .filter(|p| !omissions.iter().any(|o| o.point == *p))
        .collect();
    let n = path.len() - 1;
    let points: Vec<(Q, Q)> = (1..=n).map(|j| regime.projection(j)).collect();
    let base = path_heights(&path, &points);
    let free: Vec<P2> = omissions.iter().filter(|o| o.status == Status::Free).map(|o| o.point).collect();
    let lists: Vec<Vec<Q>> = free.iter().map(|&p| candidate_values(free_rule(d, p), regime, n)).collect();
    let mut idx = vec![0usize; free.len()];
    loop {
        let params: BTreeMap<P2, Q> =
            free.iter().enumerate().map(|(i, &p)| (p, lists[i][idx[i]].clone())).collect();
        let mut h = base.clone();
        let ok = complete_heights(d, omissions, &mut h, |p, known| {
            let t = &params[&p];
            match free_rule(d, p) {
                FreeRule::Absolute => Some(t.clone()),
                rule => {
                    let end = ends_of(d, p, omissions).into_iter().next()?;
                    let ha = known.get(&end.anchor)?;
                    let wt = q(end.weight) * t;
                    Some(match rule {
                        FreeRule::Left => ha + wt,
                        _ => ha - wt,
                    })
                }
            }
        });
        if ok.is_ok() {
            if let Ok(sub) = check_floor(d, &path, omissions, &h, &points) {
                return Some(sub);
            }
        } else {
            // dependency cycle: no choice of parameters helps
            return None;
        }
        // advance the odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn build(d: i64, omissions: Vec<Omission>, subdivision: Subdivision2) -> FloorCurve {
    let germs = derive_germs(d, &omissions);
    let path = triangle_points(d)
        .expect("degree checked")
        .into_iter()
        .filter(|p| !omissions.iter().any(|o| o.point == *p))
        .collect();
    FloorCurve {
        degree: d,
        tag: tag_of(d, &omissions),
        label: label_of(&germs),
        omissions,
        path,
        subdivision,
        germs,
    }
}

fn generate(d: i64, g: usize) -> Vec<FloorCurve> {
    let regime = Regime::canonical();
    let mut out = Vec::new();
    for set in omitted_sets(d, g) {
        let options: Vec<Vec<Status>> = set.iter().map(|&p| status_options(d, p)).collect();
        let mut idx = vec![0usize; set.len()];
        'combos: loop {
            let omissions: Vec<Omission> =
                set.iter().zip(&idx).enumerate().map(|(i, (&p, &k))| Omission { point: p, status: options[i][k].clone() }).collect();
            let consistent = omissions.iter().all(|o| match &o.status {
                Status::Forced { quad } => quad.iter().filter(|&&v| v != o.point).all(|v| match omissions.iter().find(|x| x.point == *v) {
                    None => true,
                    Some(x) => x.status == Status::Free,
                }),
                _ => true,
            });
            let germs = derive_germs(d, &omissions);
            if consistent && admissible(position(d), &germs, g, &omissions) {
                if let Some(sub) = realize_standalone(d, &omissions, &regime) {
                    out.push(build(d, omissions, sub));
                }
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break 'combos;
                }
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    out.sort_by(|a, b| a.tag.cmp(&b.tag));
    out
}

type Cache = Mutex<HashMap<(i64, usize), Arc<Vec<FloorCurve>>>>;

/// Every realizable floor of the given degree and germ count, including
/// conics with a right string. Memoized.
pub fn catalog(degree: i64, germs: usize) -> Result<Arc<Vec<FloorCurve>>, FloorError> {
    if !(1..=3).contains(&degree) {
        return Err(FloorError::InvalidDegree(degree));
    }
    if germs > 2 || germs > 0 && degree == 1 && germs != 1 {
        return Err(FloorError::NoSuchFloor { degree, germs });
    }
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("catalog cache").get(&(degree, germs)) {
        return Ok(c.clone());
    }
    let floors = if germs == 0 {
        let sub = realize_standalone(degree, &[], &Regime::canonical()).ok_or(FloorError::InvalidDegree(degree))?;
        vec![build(degree, Vec::new(), sub)]
    } else {
        generate(degree, germs)
    };
    let floors = Arc::new(floors);
    cache.lock().expect("catalog cache").insert((degree, germs), floors.clone());
    Ok(floors)
}

/// The floor through all of its points.
pub fn smooth_floor(degree: i64) -> Result<FloorCurve, FloorError> {
    Ok(catalog(degree, 0)?[0].clone())
}

/// Floors with `germs` node germs. Conics with a right string are left out:
/// they can never be part of a floor plan.
pub fn germ_floors(degree: i64, germs: usize) -> Result<Vec<FloorCurve>, FloorError> {
    if germs == 0 {
        return Err(FloorError::NoSuchFloor { degree, germs });
    }
    let all = catalog(degree, germs)?;
    Ok(all
        .iter()
        .filter(|f| !(f.degree == 2 && f.germs.iter().any(|g| g.ends.iter().any(|e| e.free == P2::new(2, 0)))))
        .cloned()
        .collect())
}

/// Look a floor up by tag.
pub fn find_floor(tag: &str) -> Option<FloorCurve> {
    let degree: i64 = tag.split('-').next()?.parse().ok()?;
    let germs = if tag.contains('-') { tag.split('-').nth(1)?.split('.').count() } else { 0 };
    catalog(degree, germs).ok()?.iter().find(|f| f.tag == tag).cloned()
}
