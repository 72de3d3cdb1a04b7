use std::collections::BTreeSet;
use std::fmt;

use lattice_core::LatticePoint2 as P2;
use serde::{Deserialize, Serialize};

/// What happens to a lattice point left off the marked path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Below the segment of its neighbours: that boundary edge gets weight two (or three).
    Low,
    /// An unconstrained vertex: the floor gains a movable string.
    Free,
    /// A vertex of a parallelogram cell, its height fixed by the other three.
    Forced { quad: [P2; 4] },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Omission {
    pub point: P2,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GermKind {
    ParallelogramVertex,
    HorizontalWeight2End,
    DiagonalWeight2End,
    LeftString,
    RightString,
    VerticalWeight2End,
    TwoDimString,
    WeightThreeEnd,
    /// The top corner is free: its ends can only move up and down.
    UpwardString,
    /// A free point inside a side: the two ends on that side separate.
    SideString,
}

impl GermKind {
    pub fn is_string(self) -> bool {
        matches!(
            self,
            GermKind::LeftString
                | GermKind::RightString
                | GermKind::TwoDimString
                | GermKind::UpwardString
                | GermKind::SideString
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            GermKind::ParallelogramVertex => "parallelogram",
            GermKind::HorizontalWeight2End => "horizontal weight-2 end",
            GermKind::DiagonalWeight2End => "diagonal weight-2 end",
            GermKind::LeftString => "left string",
            GermKind::RightString => "right string",
            GermKind::VerticalWeight2End => "vertical weight-2 end",
            GermKind::TwoDimString => "two-dimensional string",
            GermKind::WeightThreeEnd => "weight-3 end",
            GermKind::UpwardString => "upward string",
            GermKind::SideString => "side string",
        }
    }
}

impl fmt::Display for GermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An unbounded end that a free vertex can move: dual to the boundary
/// segment `free`-`anchor` of lattice length `weight`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StringEnd {
    pub free: P2,
    pub anchor: P2,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeGerm {
    pub kind: GermKind,
    /// Path points this germ takes off the path.
    pub omitted: Vec<P2>,
    /// Parallelogram vertices, or the endpoints of a long boundary edge.
    pub dual: Vec<P2>,
    /// Movable ends of a string.
    pub ends: Vec<StringEnd>,
}

impl NodeGerm {
    /// Number of nodes (and of point conditions) the germ accounts for.
    pub fn nodes(&self) -> usize {
        self.omitted.len()
    }

    /// Weight of the germ's long edge or string end.
    pub fn weight(&self) -> i64 {
        match self.kind {
            GermKind::ParallelogramVertex => 1,
            _ if !self.ends.is_empty() => self.ends.iter().map(|e| e.weight).max().unwrap_or(1),
            _ if self.dual.len() == 2 => {
                lattice_core::lattice_length2(self.dual[0], self.dual[1])
            }
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Bottom,
    Hypotenuse,
}

pub(crate) fn sides_of(d: i64, p: P2) -> Vec<Side> {
    let mut s = Vec::new();
    if p.x == 0 {
        s.push(Side::Left);
    }
    if p.y == 0 {
        s.push(Side::Bottom);
    }
    if p.x + p.y == d {
        s.push(Side::Hypotenuse);
    }
    s
}

/// Lattice points of one side, in order.
pub(crate) fn side_points(d: i64, side: Side) -> Vec<P2> {
    (0..=d)
        .map(|t| match side {
            Side::Left => P2::new(0, t),
            Side::Bottom => P2::new(t, 0),
            Side::Hypotenuse => P2::new(d - t, t),
        })
        .collect()
}

/// A maximal run of low points on one side with its two endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LowRun {
    pub side: Side,
    pub lows: Vec<P2>,
    pub ends: (P2, P2),
}

pub(crate) fn low_runs(d: i64, omissions: &[Omission]) -> Vec<LowRun> {
    let low: BTreeSet<P2> =
        omissions.iter().filter(|o| o.status == Status::Low).map(|o| o.point).collect();
    let mut runs = Vec::new();
    for side in [Side::Left, Side::Bottom, Side::Hypotenuse] {
        let pts = side_points(d, side);
        let mut i = 1;
        while i < pts.len() {
            if low.contains(&pts[i]) {
                let start = i - 1;
                let mut j = i;
                while j < pts.len() && low.contains(&pts[j]) {
                    j += 1;
                }
                if j < pts.len() {
                    runs.push(LowRun { side, lows: pts[i..j].to_vec(), ends: (pts[start], pts[j]) });
                }
                i = j;
            } else {
                i += 1;
            }
        }
    }
    runs
}

/// Where a free vertex sits, which decides the kind of its string.
pub(crate) fn free_kind(d: i64, p: P2) -> GermKind {
    if p == P2::new(0, 0) {
        GermKind::LeftString
    } else if p == P2::new(d, 0) {
        GermKind::RightString
    } else if p == P2::new(0, d) {
        GermKind::UpwardString
    } else {
        GermKind::SideString
    }
}

/// The ends of a free vertex: towards the next non-low point along each
/// side through it, walking away from the corner `(0,0)` on the left side
/// and towards the top on the hypotenuse.
pub(crate) fn ends_of(d: i64, p: P2, omissions: &[Omission]) -> Vec<StringEnd> {
    let low: BTreeSet<P2> =
        omissions.iter().filter(|o| o.status == Status::Low).map(|o| o.point).collect();
    let mut out = Vec::new();
    for side in sides_of(d, p) {
        let pts = side_points(d, side);
        let i = pts.iter().position(|&x| x == p).unwrap();
        let dirs: &[i64] = match (side, free_kind(d, p)) {
            (Side::Left, GermKind::LeftString) | (Side::Left, GermKind::SideString) => &[1],
            (Side::Hypotenuse, GermKind::RightString) => &[1],
            (Side::Left, GermKind::UpwardString) | (Side::Hypotenuse, GermKind::UpwardString) => &[-1],
            (Side::Bottom, GermKind::SideString) | (Side::Hypotenuse, GermKind::SideString) => &[-1, 1],
            _ => &[],
        };
        for &dir in dirs {
            let mut j = i as i64 + dir;
            while (0..pts.len() as i64).contains(&j) && low.contains(&pts[j as usize]) {
                j += dir;
            }
            if (0..pts.len() as i64).contains(&j) {
                let a = pts[j as usize];
                out.push(StringEnd { free: p, anchor: a, weight: (j - i as i64).abs() });
            }
        }
    }
    out
}

/// Node germs implied by a set of omissions.
pub fn derive_germs(d: i64, omissions: &[Omission]) -> Vec<NodeGerm> {
    let free: Vec<P2> = omissions.iter().filter(|o| o.status == Status::Free).map(|o| o.point).collect();
    let runs = low_runs(d, omissions);
    let mut germs = Vec::new();
    let ends: Vec<StringEnd> = free.iter().flat_map(|&p| ends_of(d, p, omissions)).collect();
    // a low run belongs to a string when one of its ends spans the run
    let attached = |r: &LowRun| {
        ends.iter().any(|e| (e.free, e.anchor) == r.ends || (e.anchor, e.free) == r.ends)
    };

    if !free.is_empty() {
        let mut omitted: Vec<P2> = free.clone();
        for r in runs.iter().filter(|r| attached(r)) {
            omitted.extend(&r.lows);
        }
        omitted.sort();
        let kind = if free.len() >= 2 { GermKind::TwoDimString } else { free_kind(d, free[0]) };
        germs.push(NodeGerm { kind, omitted, dual: Vec::new(), ends: ends.clone() });
    }
    for r in runs.iter().filter(|r| !attached(r)) {
        let kind = if r.lows.len() >= 2 {
            GermKind::WeightThreeEnd
        } else {
            match r.side {
                Side::Left => GermKind::HorizontalWeight2End,
                Side::Bottom => GermKind::VerticalWeight2End,
                Side::Hypotenuse => GermKind::DiagonalWeight2End,
            }
        };
        germs.push(NodeGerm { kind, omitted: r.lows.clone(), dual: vec![r.ends.0, r.ends.1], ends: Vec::new() });
    }
    for o in omissions {
        if let Status::Forced { quad } = &o.status {
            let mut dual = quad.to_vec();
            dual.sort();
            germs.push(NodeGerm {
                kind: GermKind::ParallelogramVertex,
                omitted: vec![o.point],
                dual,
                ends: Vec::new(),
            });
        }
    }
    germs.sort();
    germs
}
