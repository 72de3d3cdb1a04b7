//! Floor plans that cannot give two separated nodes.

use std::fmt;

use floor_curves::{FloorCurve, GermKind};
use lattice_core::{lattice_length2, LatticePoint2 as P2};
use serde::{Deserialize, Serialize};

use crate::plan::{AlignmentTarget, FloorPlan};
use crate::placement::GermPlacement;
use crate::verdict::SeparationVerdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EliminationRule {
    /// A conic floor whose right corner is free.
    RightStringInConic,
    /// A weight-two end pointing down: its node cannot be fixed.
    VerticalWeightTwo,
    /// The top corner is free and its ends only move up and down.
    UpwardString,
    /// A right string of weight two, or a two-dimensional string through the
    /// right corner, on the cubic floor: its end is too steep to meet the conic.
    Slope,
    /// A string that no alignment can fix.
    UnfixedFreedom,
    /// A line string aligned with a vertex whose cell is too small for two nodes.
    Dimension,
    /// A string with no target in the neighbouring floor.
    Unalignable,
}

impl EliminationRule {
    pub fn tag(self) -> &'static str {
        match self {
            EliminationRule::RightStringInConic => "right-string-in-conic",
            EliminationRule::VerticalWeightTwo => "vertical-weight-two",
            EliminationRule::UpwardString => "upward-string",
            EliminationRule::Slope => "slope",
            EliminationRule::UnfixedFreedom => "unfixed-freedom",
            EliminationRule::Dimension => "dimension",
            EliminationRule::Unalignable => "unalignable",
        }
    }
}

impl fmt::Display for EliminationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn is_free(f: &FloorCurve, p: P2) -> bool {
    f.free_points().contains(&p)
}

fn floor_rule(f: &FloorCurve) -> Option<EliminationRule> {
    let d = f.degree;
    if d == 2 && is_free(f, P2::new(2, 0)) {
        return Some(EliminationRule::RightStringInConic);
    }
    if f.has(GermKind::VerticalWeight2End) {
        return Some(EliminationRule::VerticalWeightTwo);
    }
    if d > 1 && is_free(f, P2::new(0, d)) {
        return Some(EliminationRule::UpwardString);
    }
    if d == 3 {
        for g in &f.germs {
            let steep = match g.kind {
                GermKind::RightString => g.weight() >= 2,
                GermKind::TwoDimString => g.omitted.contains(&P2::new(3, 0)),
                _ => false,
            };
            if steep {
                return Some(EliminationRule::Slope);
            }
        }
    }
    for g in &f.germs {
        match g.kind {
            GermKind::SideString => return Some(EliminationRule::UnfixedFreedom),
            GermKind::TwoDimString if !g.ends.iter().all(|e| e.free.x == 0 && e.anchor.x == 0) => {
                return Some(EliminationRule::UnfixedFreedom)
            }
            GermKind::TwoDimString | GermKind::LeftString if d == 3 => {
                return Some(EliminationRule::UnfixedFreedom)
            }
            GermKind::RightString if d == 1 => return Some(EliminationRule::UnfixedFreedom),
            _ => {}
        }
    }
    None
}

/// The first rule that rules out one of the plan's floors, regardless of
/// alignments.
pub fn floor_obstruction(plan: &FloorPlan) -> Option<EliminationRule> {
    plan.curves.iter().find_map(floor_rule)
}

/// Eliminated verdict when a rule applies, `None` to pass the plan on.
pub fn apply_eliminations(plan: &FloorPlan) -> Option<SeparationVerdict> {
    let rule = floor_obstruction(plan).or_else(|| {
        let strings = plan.curves.iter().flat_map(|f| &f.germs).filter(|g| g.kind.is_string()).count();
        if strings > 0 && plan.alignments.is_empty() {
            return Some(EliminationRule::Unalignable);
        }
        let too_small = plan.alignments.iter().any(|a| match &a.target {
            AlignmentTarget::Vertex(v) if a.source_degree == 1 => {
                let n = v.cell.len();
                (0..n).any(|i| (i + 1..n).any(|j| lattice_length2(v.cell[i], v.cell[j]) >= 2))
            }
            _ => false,
        });
        too_small.then_some(EliminationRule::Dimension)
    })?;
    Some(SeparationVerdict::Eliminated { rule, prospect: is_prospect(plan, rule) })
}

/// Eliminated two-germ floors whose string could still meet an unbounded
/// end of another floor: a free top corner whose string is not vertical, a
/// free corner `(0,0)` below a fixed top, or a steep right string on the
/// cubic floor.
pub fn is_prospect(plan: &FloorPlan, rule: EliminationRule) -> bool {
    let d = match plan.placement {
        GermPlacement::Pair(a, b) if a == b => a,
        _ => return false,
    };
    if rule == EliminationRule::RightStringInConic {
        return false;
    }
    if rule == EliminationRule::Slope {
        return true;
    }
    let f = plan.floor(d);
    let top = P2::new(0, d);
    if !is_free(f, top) {
        return is_free(f, P2::new(0, 0));
    }
    // a vertical upward string meets nothing, whatever else is free
    let neighbours = [P2::new(0, d - 1), P2::new(1, d - 1)];
    f.germs.iter().any(|g| g.omitted.contains(&top) && g.ends.iter().any(|e| e.free == top && e.weight >= 2))
        || neighbours.iter().any(|&p| is_free(f, p))
}
