use std::sync::OnceLock;

use floor_curves::mikhalkin::q;
use floor_curves::{GermKind, Orientation, Q};
use floorplan_engine::verdict::classify_cells;
use floorplan_engine::*;
use lattice_core::{complexes_intersect, CircuitClass, IntersectionKind, LatticePoint2 as P2};

fn census() -> &'static Vec<Vec<FloorPlan>> {
    static C: OnceLock<Vec<Vec<FloorPlan>>> = OnceLock::new();
    C.get_or_init(|| GermPlacement::BINODAL.iter().map(|&p| evaluate_placement(p).unwrap()).collect())
}

fn plan(id: &str) -> FloorPlan {
    census().iter().flatten().find(|p| p.id == id).unwrap_or_else(|| panic!("{id} missing")).clone()
}

fn verdict(id: &str) -> SeparationVerdict {
    plan(id).verdict.unwrap()
}

#[test]
fn point_allocation() {
    assert_eq!(allocate_points(GermPlacement::Pair(3, 1)).unwrap(), [8, 5, 1]);
    assert_eq!(allocate_points(GermPlacement::Pair(2, 2)).unwrap(), [9, 3, 2]);
    assert_eq!(allocate_points(GermPlacement::Pair(3, 3)).unwrap(), [7, 5, 2]);
    assert_eq!(allocate_points(GermPlacement::Smooth).unwrap(), [9, 5, 2]);
    for p in GermPlacement::BINODAL {
        assert_eq!(total_points(p).unwrap(), 17);
    }
    assert!(matches!(allocate_points(GermPlacement::Pair(1, 1)), Err(EngineError::InvalidPlacement(_))));
    assert_eq!(GermPlacement::for_delta(3), Err(EngineError::UnsupportedDelta(3)));
}

#[test]
fn placement_codes() {
    for p in GermPlacement::BINODAL.into_iter().chain(GermPlacement::NODAL).chain([GermPlacement::Smooth]) {
        assert_eq!(GermPlacement::parse_code(&p.code()), Some(p));
    }
    assert_eq!(GermPlacement::Pair(3, 2).to_string(), "(3,2)");
}

#[test]
fn conic_left_string_meets_each_cubic_edge() {
    let plans: Vec<FloorPlan> = enumerate_candidates(GermPlacement::Pair(2, 1))
        .unwrap()
        .into_iter()
        .filter(|p| p.floor(2).tag == "2-F00")
        .collect();
    assert_eq!(plans.len(), 3);
    let columns: Vec<_> = plans
        .iter()
        .map(|p| p.alignments.iter().find(|a| a.source_degree == 2).unwrap().edge_column())
        .collect();
    assert_eq!(columns, [Some(1), Some(1), Some(2)]);
}

#[test]
fn cubic_right_string_has_one_target() {
    let plans = enumerate_candidates(GermPlacement::Pair(3, 1)).unwrap();
    let right: Vec<_> = plans.iter().filter(|p| p.floor(3).tag == "3-F30").collect();
    assert_eq!(right.len(), 1);
    let a = right[0].alignments.iter().find(|a| a.source_degree == 3).unwrap();
    match &a.target {
        AlignmentTarget::Edge(e) => {
            assert_eq!(e.orientation, Orientation::Diagonal);
            assert_eq!(e.dual_edge, (P2::new(0, 1), P2::new(1, 0)));
        }
        t => panic!("unexpected target {t:?}"),
    }
    assert!(!a.is_left() && a.is_separating());
}

#[test]
fn two_dimensional_string_takes_edge_pairs() {
    let plans: Vec<FloorPlan> = enumerate_candidates(GermPlacement::Pair(2, 2))
        .unwrap()
        .into_iter()
        .filter(|p| p.floor(2).tag == "2-F00.F01")
        .collect();
    assert_eq!(plans.len(), 3);
    for p in &plans {
        assert_eq!(p.alignments.len(), 2);
        assert_ne!(p.alignments[0].target, p.alignments[1].target);
    }
}

#[test]
fn elimination_rules() {
    let rule = |id: &str| match verdict(id) {
        SeparationVerdict::Eliminated { rule, .. } => rule,
        v => panic!("{id}: {}", v.label()),
    };
    assert_eq!(rule("p21-04"), EliminationRule::RightStringInConic);
    assert_eq!(plan("p21-04").floor(2).tag, "2-F20");
    assert_eq!(rule("p22-10"), EliminationRule::VerticalWeightTwo);
    assert_eq!(plan("p22-10").floor(2).tag, "2-F00.L10");
    assert_eq!(rule("p21-06"), EliminationRule::Dimension);
    assert_eq!(rule("p33-01"), EliminationRule::Slope);
    assert_eq!(rule("p22-05"), EliminationRule::UnfixedFreedom);
    assert_eq!(apply_eliminations(&plan("p31-01")), None);
}

#[test]
fn separated_examples() {
    for id in ["p32-01", "p32-02"] {
        let SeparationVerdict::Separated(sites) = verdict(id) else { panic!("{id}") };
        assert_eq!(sites.len(), 2);
        for s in &sites {
            assert_eq!(classify_cells(s.complex.cells.clone()).unwrap(), CircuitClass::BipyramidD);
        }
    }
}

#[test]
fn unseparated_examples() {
    assert_eq!(verdict("p21-07"), SeparationVerdict::Unseparated(UnseparatedTag::PrismWithTwoPyramids));
    assert_eq!(verdict("p32-14"), SeparationVerdict::Unseparated(UnseparatedTag::SharedTetrahedron));
    assert_eq!(verdict("p33-03"), SeparationVerdict::Unseparated(UnseparatedTag::WeightThree));
    assert_eq!(verdict("p32-21"), SeparationVerdict::Unseparated(UnseparatedTag::PentatopeWithWeightTwo));
}

#[test]
fn smooth_plan_realizes_at_small_spacing() {
    let z = find_plan("z-01").unwrap();
    let r = realize_numeric(&z, Q::new(1.into(), 64.into()), q(4)).unwrap();
    assert!(r.passed, "{:?}", r.failure);
    // a smooth cubic surface is fixed by 19 points
    assert_eq!(r.points.len(), total_points(GermPlacement::Smooth).unwrap());
    assert_eq!(r.points.len(), 19);
    assert!(r.points.iter().all(|p| p.ok));
}

#[test]
fn realization_errors() {
    let eta = Q::new(1.into(), 64.into());
    let big = q(1 << 20);
    let r = realize_numeric(&find_plan("p31-01").unwrap(), eta.clone(), big.clone()).unwrap();
    assert!(r.passed && r.incidences.iter().all(|w| w.ok));
    assert_eq!(r.incidences.len(), 2);
    assert!(matches!(
        realize_numeric(&find_plan("p21-04").unwrap(), eta.clone(), big.clone()),
        Err(EngineError::Eliminated { .. })
    ));
    assert_eq!(realize_numeric(&find_plan("z-01").unwrap(), q(0), big), Err(EngineError::BadRegime));
    assert_eq!(realize_numeric(&find_plan("z-01").unwrap(), eta, q(1)), Err(EngineError::BadRegime));
    assert!(matches!(find_plan("p99-01"), Err(EngineError::NoSuchPlan(_))));
    assert!(matches!(find_plan("p31-77"), Err(EngineError::NoSuchPlan(_))));
}

#[test]
fn separated_counts_per_placement() {
    let counts: Vec<usize> = census().iter().map(|c| c.iter().filter(|p| p.is_separated()).count()).collect();
    assert_eq!(counts, [3, 4, 15, 16, 1]);
    let candidates: Vec<usize> = census().iter().map(|c| c.len()).collect();
    assert_eq!(candidates, [3, 9, 27, 45, 4]);
}

#[test]
fn no_separated_conic_with_right_string() {
    for p in census().iter().flatten().filter(|p| p.is_separated()) {
        assert!(!p.floor(2).free_points().contains(&P2::new(2, 0)), "{}", p.id);
    }
}

#[test]
fn separated_complexes_do_not_overlap() {
    for p in census().iter().flatten() {
        let Some(SeparationVerdict::Separated(sites)) = &p.verdict else { continue };
        for (i, a) in sites.iter().enumerate() {
            for b in &sites[i + 1..] {
                let k = complexes_intersect(&a.complex, &b.complex);
                assert!(k <= IntersectionKind::SharedFacet, "{}", p.id);
                assert_eq!(k, complexes_intersect(&b.complex, &a.complex));
            }
        }
    }
}

#[test]
fn parallelogram_sites_are_bipyramids() {
    let mut seen = 0;
    for p in census().iter().flatten() {
        let Some(SeparationVerdict::Separated(sites)) = &p.verdict else { continue };
        for s in sites.iter().filter(|s| s.germ.kind == GermKind::ParallelogramVertex) {
            assert_eq!(classify_cells(s.complex.cells.clone()).unwrap(), CircuitClass::BipyramidD, "{}", p.id);
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn enumeration_is_deterministic() {
    for p in GermPlacement::BINODAL {
        assert_eq!(enumerate_candidates(p).unwrap(), enumerate_candidates(p).unwrap());
    }
    let again = evaluate_placement(GermPlacement::Pair(3, 2)).unwrap();
    assert_eq!(&again, &census()[2]);
}

#[test]
fn one_node_and_smooth_cases() {
    let sep = |p| evaluate_placement(p).unwrap().iter().filter(|x| x.is_separated()).count();
    assert_eq!(sep(GermPlacement::Smooth), 1);
    assert_eq!(GermPlacement::NODAL.iter().map(|&p| sep(p)).collect::<Vec<_>>(), [3, 8, 1]);
}
