//! Complex and real multiplicities of node germs and floor plans.

use std::fmt;

use floor_curves::{GermKind, NodeGerm};
use floorplan_engine::{AlignmentTarget, FloorPlan, NodeSite, SeparationVerdict};
use lattice_core::LatticePoint2 as P2;
use num::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultError {
    #[error("no multiplicity is defined for a {0}")]
    Undefined(GermKind),
    #[error("a diagonal weight-two end on a line has no nodes to offer")]
    LineWeightTwo,
    #[error("consumed intersections {consumed} out of range for degree {degree}")]
    Consumed { consumed: i64, degree: i64 },
    #[error("string germ without an alignment")]
    Unaligned,
    #[error("plan {0} is not separated")]
    NotSeparated(String),
    #[error("degree {0} is out of range: must be at least 3")]
    DegreeOutOfRange(i64),
}

/// Which of the two parallelogram shapes of the real count applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ParallelogramVariant {
    /// Vertices `(k,0), (k,1), (k-1,l), (k-1,l+1)`.
    First,
    /// Vertices `(k,i-k), (k,i-k-1), (k+1,l), (k+1,l+1)`.
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParallelogramData {
    pub k: i64,
    pub l: i64,
    pub variant: ParallelogramVariant,
}

/// What a string end was aligned with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlignedTarget {
    /// Horizontal bounded edge dual to a segment in column `k`.
    LeftEdge { column: i64 },
    /// Diagonal bounded edge.
    RightEdge,
    Vertex,
    End,
}

/// Everything the multiplicity of one germ depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermContext {
    pub floor_degree: i64,
    pub parallelogram: Option<ParallelogramData>,
    /// One entry per string end; two for a two-dimensional string.
    pub aligned: Vec<AlignedTarget>,
    /// Intersections of a diagonal weight-two end with the next floor used
    /// up by alignments elsewhere in the plan.
    pub consumed_intersections: i64,
    /// The parallelogram has a free vertex of the floor as a corner.
    pub holds_string_vertex: bool,
}

impl GermContext {
    pub fn new(floor_degree: i64) -> GermContext {
        GermContext {
            floor_degree,
            parallelogram: None,
            aligned: Vec::new(),
            consumed_intersections: 0,
            holds_string_vertex: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealValue {
    Known(u64),
    Undetermined,
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealValue::Known(v) => write!(f, "{v}"),
            RealValue::Undetermined => f.write_str("undet."),
        }
    }
}

impl RealValue {
    /// Contribution to a lower bound: undetermined counts as zero.
    pub fn lower_bound(self) -> u64 {
        match self {
            RealValue::Known(v) => v,
            RealValue::Undetermined => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiplicity {
    pub complex: u64,
    pub real: RealValue,
}

/// Signs of the point conditions; the census only uses all plus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignVector {
    pub points: usize,
}

impl SignVector {
    pub fn all_plus(points: usize) -> SignVector {
        SignVector { points }
    }
}

/// Shapes of the real count matched by a parallelogram of a degree-`i` floor.
pub fn parallelogram_data(quad: &[P2], i: i64) -> Vec<ParallelogramData> {
    let mut out = Vec::new();
    let mut cols: Vec<i64> = quad.iter().map(|p| p.x).collect();
    cols.sort();
    cols.dedup();
    if cols.len() != 2 || cols[1] != cols[0] + 1 {
        return out;
    }
    let column = |x: i64| {
        let mut ys: Vec<i64> = quad.iter().filter(|p| p.x == x).map(|p| p.y).collect();
        ys.sort();
        ys
    };
    let (left, right) = (column(cols[0]), column(cols[1]));
    if left.len() != 2 || right.len() != 2 || left[1] != left[0] + 1 || right[1] != right[0] + 1 {
        return out;
    }
    if right == [0, 1] {
        out.push(ParallelogramData { k: cols[1], l: left[0], variant: ParallelogramVariant::First });
    }
    let k = cols[0];
    if left == [i - k - 1, i - k] {
        out.push(ParallelogramData { k, l: right[0], variant: ParallelogramVariant::Second });
    }
    out
}

/// Real count of a parallelogram: 2 when the parity expression is odd.
pub fn parallelogram_parity(d: ParallelogramData, i: i64) -> u64 {
    let v = match d.variant {
        ParallelogramVariant::First => {
            // (3i/2 + 1 + k + l)(i - 1), doubled to stay integral; the
            // doubled value is always even
            (3 * i + 2 * (1 + d.k + d.l)) * (i - 1) / 2
        }
        ParallelogramVariant::Second => (i + 2 + 2 * d.l) * (i - 1) / 2,
    };
    if v.rem_euclid(2) == 1 {
        2
    } else {
        0
    }
}

fn diagonal_factor(ctx: &GermContext) -> Result<u64, MultError> {
    let i = ctx.floor_degree;
    if i <= 1 {
        return Err(MultError::LineWeightTwo);
    }
    let c = ctx.consumed_intersections;
    if c < 0 || c > i - 1 {
        return Err(MultError::Consumed { consumed: c, degree: i });
    }
    Ok((2 * (i - 1 - c)) as u64)
}

fn string_factor(t: AlignedTarget) -> u64 {
    match t {
        AlignedTarget::Vertex => 1,
        _ => 2,
    }
}

/// Complex multiplicity of one germ.
pub fn complex_mult(germ: &NodeGerm, ctx: &GermContext) -> Result<u64, MultError> {
    let i = ctx.floor_degree;
    match germ.kind {
        GermKind::ParallelogramVertex => Ok(2),
        GermKind::HorizontalWeight2End => Ok((2 * (i + 1)) as u64),
        GermKind::DiagonalWeight2End => diagonal_factor(ctx),
        GermKind::LeftString | GermKind::RightString | GermKind::TwoDimString => {
            if ctx.aligned.is_empty() {
                return Err(MultError::Unaligned);
            }
            Ok(ctx.aligned.iter().map(|&t| string_factor(t)).product())
        }
        k => Err(MultError::Undefined(k)),
    }
}

fn real_string(t: AlignedTarget, i: i64) -> RealValue {
    match t {
        AlignedTarget::Vertex => RealValue::Known(1),
        AlignedTarget::LeftEdge { column } => RealValue::Known(if (i - column) % 2 == 0 { 2 } else { 0 }),
        AlignedTarget::RightEdge | AlignedTarget::End => RealValue::Undetermined,
    }
}

/// Real multiplicity of one germ for the all-plus sign vector.
pub fn real_mult(germ: &NodeGerm, ctx: &GermContext, _s: SignVector) -> Result<RealValue, MultError> {
    let i = ctx.floor_degree;
    complex_mult(germ, ctx)?;
    Ok(match germ.kind {
        GermKind::ParallelogramVertex => match ctx.parallelogram {
            Some(d) if !ctx.holds_string_vertex => RealValue::Known(parallelogram_parity(d, i)),
            _ => RealValue::Undetermined,
        },
        GermKind::HorizontalWeight2End => RealValue::Undetermined,
        GermKind::DiagonalWeight2End => RealValue::Known(diagonal_factor(ctx)?),
        _ => combine(ctx.aligned.iter().map(|&t| real_string(t, i))),
    })
}

/// Product of real factors: a zero wins, then an undetermined factor.
pub fn combine(values: impl IntoIterator<Item = RealValue>) -> RealValue {
    let mut product = 1u64;
    let mut undetermined = false;
    for v in values {
        match v {
            RealValue::Known(0) => return RealValue::Known(0),
            RealValue::Known(x) => product *= x,
            RealValue::Undetermined => undetermined = true,
        }
    }
    if undetermined {
        RealValue::Undetermined
    } else {
        RealValue::Known(product)
    }
}

fn aligned_target(site: &NodeSite) -> Option<AlignedTarget> {
    let a = site.alignment.as_ref()?;
    Some(match &a.target {
        AlignmentTarget::Vertex(_) => AlignedTarget::Vertex,
        AlignmentTarget::End(_) => AlignedTarget::End,
        AlignmentTarget::Edge(_) => match a.edge_column() {
            Some(column) => AlignedTarget::LeftEdge { column },
            None => AlignedTarget::RightEdge,
        },
    })
}

/// Germs of a separated plan with their contexts. Sites of one
/// two-dimensional string merge into a single germ.
pub fn germ_contexts(sites: &[NodeSite]) -> Vec<(NodeGerm, GermContext)> {
    let mut out: Vec<(NodeGerm, GermContext)> = Vec::new();
    for site in sites {
        let i = site.floor_degree;
        if let Some((_, ctx)) = out.iter_mut().find(|(g, c)| g == &site.germ && c.floor_degree == i) {
            ctx.aligned.extend(aligned_target(site));
            continue;
        }
        let mut ctx = GermContext::new(i);
        ctx.aligned.extend(aligned_target(site));
        ctx.holds_string_vertex = site.holds_string_vertex;
        if site.germ.kind == GermKind::ParallelogramVertex {
            ctx.parallelogram = parallelogram_data(&site.germ.dual, i).into_iter().next();
        }
        if site.germ.kind == GermKind::DiagonalWeight2End {
            ctx.consumed_intersections = (i - 1) - site.crossings.unwrap_or(0) as i64;
        }
        out.push((site.germ.clone(), ctx));
    }
    out
}

/// Multiplicity of a plan: the product over its germs.
pub fn plan_mult(plan: &FloorPlan) -> Result<Multiplicity, MultError> {
    let Some(SeparationVerdict::Separated(sites)) = &plan.verdict else {
        return Err(MultError::NotSeparated(plan.id.clone()));
    };
    let s = SignVector::all_plus(floorplan_engine::total_points(plan.placement).unwrap_or(0));
    let mut complex = 1u64;
    let mut reals = Vec::new();
    for (g, ctx) in germ_contexts(sites) {
        complex *= complex_mult(&g, &ctx)?;
        reals.push(real_mult(&g, &ctx, s)?);
    }
    Ok(Multiplicity { complex, real: combine(reals) })
}

/// Degree of the variety of binodal degree-`m` surfaces.
pub fn vainsencher_degree(m: i64) -> Result<BigInt, MultError> {
    if m < 3 {
        return Err(MultError::DegreeOutOfRange(m));
    }
    let m = BigInt::from(m);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let cubic = BigInt::from(4) * &m * &m * &m - BigInt::from(8) * &m * &m + BigInt::from(8) * &m - 25;
    Ok(&two * (&m - &two) * cubic * (&m - &one) * (&m - &one))
}
