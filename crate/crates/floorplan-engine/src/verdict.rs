//! Node complexes in the cubic simplex and the separation verdict.

use std::fmt;

use floor_curves::{GermKind, NodeGerm, Regime, Q};
use num::{BigInt, One};
use lattice_core::{
    classify_circuit, complexes_intersect, lattice_length2, upper_cells_3d, Cell, CircuitClass, ComplexShape,
    IntersectionKind, LatticePoint2 as P2, LatticePoint3 as P3, PolytopeComplex,
};
use serde::{Deserialize, Serialize};

use crate::plan::{Alignment, AlignmentTarget, FloorPlan};
use crate::realize::{check, realize, SurfaceRealization};
use crate::rules::{apply_eliminations, EliminationRule};
use crate::EngineError;

/// Complex classes of unseparated plans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnseparatedTag {
    /// A prism between two floors with a pyramid on either side.
    PrismWithTwoPyramids,
    /// A right string meeting the vertex of a triangle with a weight-two edge.
    RightStringWeightTwoVertex,
    /// Both weight-two ends in one tetrahedron.
    SharedTetrahedron,
    /// A right string meeting the vertex of a parallelogram.
    RightStringSquareVertex,
    /// A string bipyramid that swallows a weight-two end.
    BipyramidWithWeightTwo,
    /// A string pentatope that swallows a weight-two end.
    PentatopeWithWeightTwo,
    /// A weight-two left string aligned with an edge in column one.
    WeightTwoStringInner,
    /// A weight-two left string aligned with an edge in column two.
    WeightTwoStringOuter,
    /// An end of weight three.
    WeightThree,
    /// Any other failure; not expected in the census.
    Other,
}

impl UnseparatedTag {
    pub const CLASSES: [UnseparatedTag; 9] = [
        UnseparatedTag::PrismWithTwoPyramids,
        UnseparatedTag::RightStringWeightTwoVertex,
        UnseparatedTag::SharedTetrahedron,
        UnseparatedTag::RightStringSquareVertex,
        UnseparatedTag::BipyramidWithWeightTwo,
        UnseparatedTag::PentatopeWithWeightTwo,
        UnseparatedTag::WeightTwoStringInner,
        UnseparatedTag::WeightTwoStringOuter,
        UnseparatedTag::WeightThree,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            UnseparatedTag::PrismWithTwoPyramids => "prism-with-two-pyramids",
            UnseparatedTag::RightStringWeightTwoVertex => "right-string-weight-two-vertex",
            UnseparatedTag::SharedTetrahedron => "shared-tetrahedron",
            UnseparatedTag::RightStringSquareVertex => "right-string-square-vertex",
            UnseparatedTag::BipyramidWithWeightTwo => "bipyramid-with-weight-two",
            UnseparatedTag::PentatopeWithWeightTwo => "pentatope-with-weight-two",
            UnseparatedTag::WeightTwoStringInner => "weight-two-string-inner",
            UnseparatedTag::WeightTwoStringOuter => "weight-two-string-outer",
            UnseparatedTag::WeightThree => "weight-three",
            UnseparatedTag::Other => "other",
        }
    }
}

impl fmt::Display for UnseparatedTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One node of a plan: the germ, how it is fixed, and the complex dual to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSite {
    pub floor_degree: i64,
    pub germ: NodeGerm,
    /// The alignment fixing a string end.
    pub alignment: Option<Alignment>,
    pub complex: PolytopeComplex,
    /// For a weight-two end, the tetrahedra it spans with unit edges of the
    /// neighbouring floor.
    pub crossings: Option<usize>,
    /// A parallelogram one of whose vertices is a free vertex of the floor.
    pub holds_string_vertex: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparationVerdict {
    Separated(Vec<NodeSite>),
    Unseparated(UnseparatedTag),
    Eliminated {
        rule: EliminationRule,
        /// Whether alignment with an unbounded end remains a possibility.
        prospect: bool,
    },
}

impl SeparationVerdict {
    pub fn label(&self) -> String {
        match self {
            SeparationVerdict::Separated(_) => "separated".into(),
            SeparationVerdict::Unseparated(t) => format!("unseparated({t})"),
            SeparationVerdict::Eliminated { rule, .. } => format!("eliminated({rule})"),
        }
    }
}

/// Three-cells of the regular subdivision, slab by slab.
pub fn slab_cells(r: &SurfaceRealization) -> Vec<Cell> {
    let all = r.heights3();
    let mut out = Vec::new();
    for s in 0..3 {
        let slab: Vec<&(P3, Q)> = all.iter().filter(|(p, _)| p.x == s || p.x == s + 1).collect();
        let den = slab.iter().fold(BigInt::one(), |d, (_, h)| num::integer::lcm(d, h.denom().clone()));
        let pts: Vec<(P3, BigInt)> =
            slab.iter().map(|(p, h)| (*p, (h * Q::from_integer(den.clone())).to_integer())).collect();
        out.extend(upper_cells_3d(&pts).into_iter().filter(|c| c.dim() == 3));
    }
    out.sort();
    out.dedup();
    out
}

fn containing(cells: &[Cell], pts: &[P3]) -> Vec<Cell> {
    cells.iter().filter(|c| c.contains_all(pts)).cloned().collect()
}

fn lift(pts: &[P2], slice: i64) -> Vec<P3> {
    pts.iter().map(|p| p.lift(slice)).collect()
}

/// Tetrahedra of the complex made of the weight-two edge and a unit edge of
/// the neighbouring slice.
fn crossings(complex: &[Cell], slice: i64) -> usize {
    complex
        .iter()
        .filter(|c| c.vertices().len() == 4)
        .filter(|c| {
            let other: Vec<P3> = c.points().iter().copied().filter(|p| p.x == slice).collect();
            other.len() == 2 && lattice_core::lattice_length3(other[0], other[1]) == 1
        })
        .count()
}

fn target_points(a: &Alignment) -> Vec<P3> {
    let slice = 3 - a.target_degree;
    match &a.target {
        AlignmentTarget::Edge(e) => lift(&[e.dual_edge.0, e.dual_edge.1], slice),
        AlignmentTarget::Vertex(v) => lift(&v.cell, slice),
        AlignmentTarget::End(e) => lift(&[e.free, e.anchor], slice),
    }
}

/// Node sites of a plan that passed the eliminations.
pub fn node_sites(plan: &FloorPlan, cells: &[Cell]) -> Result<Vec<NodeSite>, EngineError> {
    let mut sites = Vec::new();
    for (s, f) in plan.curves.iter().enumerate() {
        let slice = s as i64;
        for g in &f.germs {
            let base = |pts: Vec<P3>, alignment: Option<Alignment>| -> Result<NodeSite, EngineError> {
                let complex = PolytopeComplex::classified(containing(cells, &pts))?;
                Ok(NodeSite {
                    floor_degree: f.degree,
                    germ: g.clone(),
                    alignment,
                    complex,
                    crossings: None,
                    holds_string_vertex: false,
                })
            };
            match g.kind {
                GermKind::ParallelogramVertex => {
                    let mut site = base(lift(&g.dual, slice), None)?;
                    site.holds_string_vertex = g.dual.iter().any(|p| f.free_points().contains(p));
                    sites.push(site);
                }
                GermKind::HorizontalWeight2End | GermKind::DiagonalWeight2End | GermKind::WeightThreeEnd => {
                    let mut site = base(lift(&g.dual, slice), None)?;
                    let next = if g.kind == GermKind::HorizontalWeight2End { slice - 1 } else { slice + 1 };
                    site.crossings = Some(crossings(&site.complex.cells, next));
                    sites.push(site);
                }
                _ => {
                    for e in &g.ends {
                        let a = plan
                            .alignments
                            .iter()
                            .find(|a| a.source_degree == f.degree && a.end == *e)
                            .ok_or_else(|| EngineError::Unresolved(format!("end at {} in {}", e.free, plan.id)))?;
                        let mut pts = lift(&[e.free, e.anchor], slice);
                        pts.extend(target_points(a));
                        sites.push(base(pts, Some(a.clone()))?);
                    }
                }
            }
        }
    }
    Ok(sites)
}

fn has_long_edge(cell: &[P2]) -> bool {
    let n = cell.len();
    (0..n).any(|i| (i + 1..n).any(|j| lattice_length2(cell[i], cell[j]) >= 2))
}

fn complex_has_long_edge(c: &PolytopeComplex) -> bool {
    c.cells.iter().any(|x| x.edges().iter().any(|&(a, b)| lattice_core::lattice_length3(a, b) >= 2))
}

/// Which unseparated class a plan falls in.
pub fn unseparated_tag(plan: &FloorPlan, sites: &[NodeSite]) -> UnseparatedTag {
    if plan.curves.iter().any(|f| f.has(GermKind::WeightThreeEnd)) {
        return UnseparatedTag::WeightThree;
    }
    for a in &plan.alignments {
        if a.is_left() && a.end.weight >= 2 {
            return match a.edge_column() {
                Some(1) => UnseparatedTag::WeightTwoStringInner,
                _ => UnseparatedTag::WeightTwoStringOuter,
            };
        }
    }
    for a in &plan.alignments {
        if let AlignmentTarget::Vertex(v) = &a.target {
            if !a.is_left() && v.cell.len() == 4 {
                return UnseparatedTag::RightStringSquareVertex;
            }
            if has_long_edge(&v.cell) {
                return if a.is_left() {
                    UnseparatedTag::PentatopeWithWeightTwo
                } else {
                    UnseparatedTag::RightStringWeightTwoVertex
                };
            }
        }
    }
    let w2: Vec<&NodeSite> = sites
        .iter()
        .filter(|s| matches!(s.germ.kind, GermKind::HorizontalWeight2End | GermKind::DiagonalWeight2End))
        .collect();
    if w2.len() == 2 && w2[0].complex.cells.iter().any(|c| w2[1].complex.cells.contains(c)) {
        return UnseparatedTag::SharedTetrahedron;
    }
    if sites.iter().any(|s| s.alignment.is_some() && complex_has_long_edge(&s.complex)) {
        return UnseparatedTag::BipyramidWithWeightTwo;
    }
    if sites.iter().any(|s| s.complex.class == CircuitClass::Unseparated(ComplexShape::Prism))
        || overlapping(sites)
    {
        return UnseparatedTag::PrismWithTwoPyramids;
    }
    UnseparatedTag::Other
}

fn overlapping(sites: &[NodeSite]) -> bool {
    (0..sites.len()).any(|i| {
        (i + 1..sites.len())
            .any(|j| complexes_intersect(&sites[i].complex, &sites[j].complex) == IntersectionKind::Overlap)
    })
}

/// Separated when every site carries a node circuit and no two sites overlap.
pub fn decide(plan: &FloorPlan, sites: Vec<NodeSite>) -> SeparationVerdict {
    let all_nodes = sites.iter().all(|s| s.complex.class.is_node());
    if all_nodes && !overlapping(&sites) && sites.len() == plan.placement.delta() {
        SeparationVerdict::Separated(sites)
    } else {
        SeparationVerdict::Unseparated(unseparated_tag(plan, &sites))
    }
}

/// Full verdict for a candidate, at the canonical point configuration.
pub fn separation_verdict(plan: &FloorPlan) -> Result<SeparationVerdict, EngineError> {
    if let Some(v) = apply_eliminations(plan) {
        return Ok(v);
    }
    let r = realize(plan, &Regime::canonical())?;
    let report = check(plan, &r);
    if let Some(f) = report.failure {
        return Err(EngineError::Realization { plan: plan.id.clone(), reason: f });
    }
    let cells = slab_cells(&r);
    let sites = node_sites(plan, &cells)?;
    Ok(decide(plan, sites))
}

/// Classify a site complex again, for callers holding bare cells.
pub fn classify_cells(cells: Vec<Cell>) -> Result<CircuitClass, EngineError> {
    Ok(classify_circuit(&PolytopeComplex::unclassified(cells))?)
}
