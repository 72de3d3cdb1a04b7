//! Floor plans of binodal cubic surfaces: candidates, alignments,
//! eliminations and the separation verdict.

pub mod placement;
pub mod plan;
pub mod realize;
pub mod rules;
pub mod verdict;

pub use placement::{allocate_points, total_points, GermPlacement};
pub use plan::{enumerate_candidates, find_plan, Alignment, AlignmentTarget, FloorPlan};
pub use realize::{realize, realize_numeric, RealizationReport, SurfaceRealization};
pub use rules::{apply_eliminations, EliminationRule};
pub use verdict::{separation_verdict, NodeSite, SeparationVerdict, UnseparatedTag};

use floor_curves::FloorError;
use lattice_core::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("invalid germ placement {0}")]
    InvalidPlacement(String),
    #[error("unsupported node count {0}: must be 0, 1 or 2")]
    UnsupportedDelta(u8),
    #[error("no plan with id {0:?}")]
    NoSuchPlan(String),
    #[error("plan {plan} is eliminated ({rule})")]
    Eliminated { plan: String, rule: String },
    #[error("eta must be positive and spacing greater than one")]
    BadRegime,
    #[error("could not resolve {0}")]
    Unresolved(String),
    #[error("plan {plan} does not realize: {reason}")]
    Realization { plan: String, reason: String },
    #[error("malformed plan: {0}")]
    Malformed(#[from] LatticeError),
    #[error(transparent)]
    Floor(#[from] FloorError),
}

/// Run the eliminations and, if the plan survives, the separation verdict;
/// the verdict is stored on the plan.
pub fn evaluate(mut plan: FloorPlan) -> Result<FloorPlan, EngineError> {
    plan.verdict = Some(separation_verdict(&plan)?);
    Ok(plan)
}

/// Every candidate of a placement, evaluated.
pub fn evaluate_placement(placement: GermPlacement) -> Result<Vec<FloorPlan>, EngineError> {
    enumerate_candidates(placement)?.into_iter().map(evaluate).collect()
}
