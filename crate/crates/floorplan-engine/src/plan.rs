use std::collections::BTreeMap;

use floor_curves::mikhalkin::path_heights;
use floor_curves::{
    bounded_edges, catalog, smooth_floor, special_vertices, BoundedEdgeRecord, FloorCurve, GermKind,
    Orientation, Regime, SpecialVertex, StringEnd, VertexMode, Q,
};
use lattice_core::LatticePoint2 as P2;
use serde::{Deserialize, Serialize};

use crate::placement::{allocate_points, GermPlacement};
use crate::verdict::SeparationVerdict;
use crate::EngineError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlignmentTarget {
    Edge(BoundedEdgeRecord),
    Vertex(SpecialVertex),
    /// An unbounded end of the target floor. Such an alignment never
    /// separates the nodes.
    End(StringEnd),
}

/// A string end of the source floor lined up with a feature of a
/// neighbouring floor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Alignment {
    pub source_degree: i64,
    pub source_kind: GermKind,
    pub end: StringEnd,
    pub target: AlignmentTarget,
    pub target_degree: i64,
}

impl Alignment {
    pub fn is_separating(&self) -> bool {
        !matches!(self.target, AlignmentTarget::End(_))
    }

    /// Left-side ends move horizontally and meet the floor above.
    pub fn is_left(&self) -> bool {
        self.target_degree == self.source_degree + 1
    }

    /// The `x`-coordinate `k` of the aligned vertical dual edge, if any.
    pub fn edge_column(&self) -> Option<i64> {
        match &self.target {
            AlignmentTarget::Edge(e) if e.orientation == Orientation::Horizontal => Some(e.dual_edge.0.x),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorPlan {
    /// Canonical id, e.g. `p32-07`.
    pub id: String,
    pub placement: GermPlacement,
    /// Floors of degree 3, 2 and 1, in slice order.
    pub curves: [FloorCurve; 3],
    pub alignments: Vec<Alignment>,
    /// Filled in by [`crate::evaluate`].
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<SeparationVerdict>,
}

impl FloorPlan {
    pub fn floor(&self, degree: i64) -> &FloorCurve {
        &self.curves[(3 - degree) as usize]
    }

    pub fn tags(&self) -> [&str; 3] {
        [&self.curves[0].tag, &self.curves[1].tag, &self.curves[2].tag]
    }

    /// The plan through `n` points: per-floor path points, each followed by
    /// a step point fixing the next floor.
    pub fn point_layout(&self) -> Result<[std::ops::Range<usize>; 3], EngineError> {
        let [n3, n2, n1] = allocate_points(self.placement)?;
        let s3 = 1..1 + n3;
        let s2 = s3.end + 1..s3.end + 1 + n2;
        let s1 = s2.end + 1..s2.end + 1 + n1;
        Ok([s3, s2, s1])
    }

    pub fn is_separated(&self) -> bool {
        matches!(self.verdict, Some(SeparationVerdict::Separated(_)))
    }
}

/// A string germ whose ends can be aligned: a left string or a
/// two-dimensional string with all its free vertices on the left side pairs
/// up with the floor above; a right string with the floor below.
fn alignable_ends(f: &FloorCurve) -> Vec<(GermKind, Vec<StringEnd>, bool)> {
    let mut out = Vec::new();
    for g in &f.germs {
        match g.kind {
            GermKind::LeftString if f.degree < 3 => out.push((g.kind, g.ends.clone(), true)),
            GermKind::RightString if f.degree > 1 => out.push((g.kind, g.ends.clone(), false)),
            GermKind::TwoDimString
                if f.degree < 3 && g.ends.iter().all(|e| e.free.x == 0 && e.anchor.x == 0) =>
            {
                out.push((g.kind, g.ends.clone(), true))
            }
            _ => {}
        }
    }
    out
}

/// Targets for one end in the neighbouring floor.
fn targets(left: bool, target: &FloorCurve) -> Vec<AlignmentTarget> {
    let (o, mode) = if left {
        (Orientation::Horizontal, VertexMode::NotAdjacentHorizontal)
    } else {
        (Orientation::Diagonal, VertexMode::NotAdjacentDiagonal)
    };
    let mut t: Vec<AlignmentTarget> = bounded_edges(target)
        .into_iter()
        .filter(|e| e.orientation == o)
        .map(AlignmentTarget::Edge)
        .collect();
    t.extend(special_vertices(target, mode).into_iter().map(AlignmentTarget::Vertex));
    t
}

/// Height of the tropical edge dual to a vertical lattice segment, from path
/// heights alone; `None` if an endpoint is off the path.
fn edge_z(h: &BTreeMap<P2, Q>, e: &BoundedEdgeRecord) -> Option<Q> {
    let (a, b) = e.dual_edge;
    Some((h.get(&a)? - h.get(&b)?) / Q::from_integer((b.y - a.y).into()))
}

/// Plan floors for a placement, in catalog order.
fn floor_choices(placement: GermPlacement) -> Result<Vec<[FloorCurve; 3]>, EngineError> {
    let per_degree = |d: i64| -> Result<Vec<FloorCurve>, EngineError> {
        let g = placement.germs_on(d);
        if g == 0 {
            Ok(vec![smooth_floor(d)?])
        } else {
            Ok(catalog(d, g)?.iter().cloned().collect())
        }
    };
    let (c3, c2, c1) = (per_degree(3)?, per_degree(2)?, per_degree(1)?);
    let mut out = Vec::new();
    for a in &c3 {
        for b in &c2 {
            for c in &c1 {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    Ok(out)
}

/// All floor plans of a placement, one per choice of alignment targets.
///
/// Floors that can never carry a separated node are still listed, without
/// alignments, so that every candidate reaches a verdict.
pub fn enumerate_candidates(placement: GermPlacement) -> Result<Vec<FloorPlan>, EngineError> {
    let placement = placement.validate()?;
    let mut plans = Vec::new();
    for curves in floor_choices(placement)? {
        let blank = FloorPlan {
            id: String::new(),
            placement,
            curves: curves.clone(),
            alignments: Vec::new(),
            verdict: None,
        };
        if crate::rules::floor_obstruction(&blank).is_some() {
            plans.push(blank);
            continue;
        }
        let layout = blank.point_layout()?;
        // per alignable germ, the list of alignment sets it may take
        let mut options: Vec<Vec<Vec<Alignment>>> = Vec::new();
        for f in curves.iter() {
            for (kind, ends, left) in alignable_ends(f) {
                let tdeg = if left { f.degree + 1 } else { f.degree - 1 };
                let tf = &curves[(3 - tdeg) as usize];
                let align = |end: StringEnd, target: AlignmentTarget| Alignment {
                    source_degree: f.degree,
                    source_kind: kind,
                    end,
                    target,
                    target_degree: tdeg,
                };
                let mut opts = Vec::new();
                if ends.len() == 1 {
                    for t in targets(left, tf) {
                        opts.push(vec![align(ends[0], t)]);
                    }
                } else {
                    // both ends go to distinct horizontal bounded edges; the
                    // lower end takes the lower edge
                    let regime = Regime::canonical();
                    let tslot = (3 - tdeg) as usize;
                    let pts: Vec<(Q, Q)> = layout[tslot].clone().map(|j| regime.projection(j)).collect();
                    let h = path_heights(&tf.path, &pts);
                    let edges: Vec<BoundedEdgeRecord> = bounded_edges(tf)
                        .into_iter()
                        .filter(|e| e.orientation == Orientation::Horizontal)
                        .collect();
                    let mut sorted_ends = ends.clone();
                    sorted_ends.sort_by_key(|e| e.free.y.min(e.anchor.y));
                    for i in 0..edges.len() {
                        for j in i + 1..edges.len() {
                            let mut pair = [edges[i], edges[j]];
                            match (edge_z(&h, &pair[0]), edge_z(&h, &pair[1])) {
                                (Some(z0), Some(z1)) if z1 < z0 => pair.swap(0, 1),
                                (Some(_), Some(_)) => {}
                                _ => return Err(EngineError::Unresolved(format!("edge pair in {}", tf.tag))),
                            }
                            opts.push(
                                sorted_ends
                                    .iter()
                                    .zip(pair)
                                    .map(|(&e, t)| align(e, AlignmentTarget::Edge(t)))
                                    .collect(),
                            );
                        }
                    }
                }
                options.push(opts);
            }
        }
        if options.iter().any(|o| o.is_empty()) {
            plans.push(blank);
            continue;
        }
        let mut combos: Vec<Vec<Alignment>> = vec![Vec::new()];
        for opts in &options {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    opts.iter().map(move |o| {
                        let mut c = c.clone();
                        c.extend(o.iter().cloned());
                        c
                    })
                })
                .collect();
        }
        for alignments in combos {
            plans.push(FloorPlan { alignments, ..blank.clone() });
        }
    }
    let code = placement.code();
    for (i, p) in plans.iter_mut().enumerate() {
        p.id = format!("{code}-{:02}", i + 1);
    }
    Ok(plans)
}

/// Look a plan up by id.
pub fn find_plan(id: &str) -> Result<FloorPlan, EngineError> {
    let code = id.split('-').next().unwrap_or_default();
    let placement = GermPlacement::parse_code(code).ok_or_else(|| EngineError::NoSuchPlan(id.to_string()))?;
    enumerate_candidates(placement)?
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| EngineError::NoSuchPlan(id.to_string()))
}
