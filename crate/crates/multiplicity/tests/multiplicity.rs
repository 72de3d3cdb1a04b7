use floor_curves::{GermKind, NodeGerm};
use floorplan_engine::{evaluate, find_plan};
use multiplicity::*;
use num::BigInt;
use proptest::prelude::*;

fn germ(kind: GermKind) -> NodeGerm {
    NodeGerm { kind, omitted: Vec::new(), dual: Vec::new(), ends: Vec::new() }
}

fn aligned(i: i64, targets: &[AlignedTarget]) -> GermContext {
    GermContext { aligned: targets.to_vec(), ..GermContext::new(i) }
}

fn parallelogram(i: i64, k: i64, l: i64, variant: ParallelogramVariant) -> GermContext {
    GermContext { parallelogram: Some(ParallelogramData { k, l, variant }), ..GermContext::new(i) }
}

fn diagonal(i: i64, consumed: i64) -> GermContext {
    GermContext { consumed_intersections: consumed, ..GermContext::new(i) }
}

const ALL_PLUS: SignVector = SignVector { points: 17 };

fn mult_of(id: &str) -> Multiplicity {
    plan_mult(&evaluate(find_plan(id).unwrap()).unwrap()).unwrap()
}

#[test]
fn complex_factors() {
    assert_eq!(complex_mult(&germ(GermKind::HorizontalWeight2End), &GermContext::new(2)).unwrap(), 6);
    assert_eq!(complex_mult(&germ(GermKind::DiagonalWeight2End), &diagonal(3, 0)).unwrap(), 4);
    assert_eq!(complex_mult(&germ(GermKind::DiagonalWeight2End), &diagonal(3, 1)).unwrap(), 2);
    assert_eq!(complex_mult(&germ(GermKind::LeftString), &aligned(2, &[AlignedTarget::Vertex])).unwrap(), 1);
    assert_eq!(complex_mult(&germ(GermKind::ParallelogramVertex), &GermContext::new(2)).unwrap(), 2);
    let edges = [AlignedTarget::LeftEdge { column: 1 }, AlignedTarget::LeftEdge { column: 2 }];
    assert_eq!(complex_mult(&germ(GermKind::TwoDimString), &aligned(2, &edges)).unwrap(), 4);
    assert_eq!(complex_mult(&germ(GermKind::RightString), &aligned(3, &[AlignedTarget::RightEdge])).unwrap(), 2);
}

#[test]
fn complex_errors() {
    assert_eq!(
        complex_mult(&germ(GermKind::VerticalWeight2End), &GermContext::new(2)),
        Err(MultError::Undefined(GermKind::VerticalWeight2End))
    );
    assert_eq!(complex_mult(&germ(GermKind::DiagonalWeight2End), &diagonal(1, 0)), Err(MultError::LineWeightTwo));
    assert!(matches!(
        complex_mult(&germ(GermKind::DiagonalWeight2End), &diagonal(3, 3)),
        Err(MultError::Consumed { .. })
    ));
    assert_eq!(complex_mult(&germ(GermKind::LeftString), &GermContext::new(1)), Err(MultError::Unaligned));
}

#[test]
fn real_factors() {
    let par = |k, l| real_mult(&germ(GermKind::ParallelogramVertex), &parallelogram(2, k, l, ParallelogramVariant::First), ALL_PLUS);
    assert_eq!(par(1, 0).unwrap(), RealValue::Known(2));
    assert_eq!(par(1, 1).unwrap(), RealValue::Known(0));
    let left = |i, k| real_mult(&germ(GermKind::LeftString), &aligned(i, &[AlignedTarget::LeftEdge { column: k }]), ALL_PLUS);
    assert_eq!(left(1, 1).unwrap(), RealValue::Known(2));
    assert_eq!(left(2, 1).unwrap(), RealValue::Known(0));
    assert_eq!(left(2, 2).unwrap(), RealValue::Known(2));
    let right = real_mult(&germ(GermKind::RightString), &aligned(3, &[AlignedTarget::RightEdge]), ALL_PLUS);
    assert_eq!(right.unwrap(), RealValue::Undetermined);
    let vertex = real_mult(&germ(GermKind::LeftString), &aligned(2, &[AlignedTarget::Vertex]), ALL_PLUS);
    assert_eq!(vertex.unwrap(), RealValue::Known(1));
    let horizontal = real_mult(&germ(GermKind::HorizontalWeight2End), &GermContext::new(2), ALL_PLUS);
    assert_eq!(horizontal.unwrap(), RealValue::Undetermined);
    assert_eq!(
        real_mult(&germ(GermKind::DiagonalWeight2End), &diagonal(3, 0), ALL_PLUS).unwrap(),
        RealValue::Known(4)
    );
}

#[test]
fn parallelogram_shapes() {
    use lattice_core::LatticePoint2 as P2;
    let quad = [P2::new(1, 0), P2::new(1, 1), P2::new(0, 0), P2::new(0, 1)];
    let d = parallelogram_data(&quad, 2);
    assert!(d.contains(&ParallelogramData { k: 1, l: 0, variant: ParallelogramVariant::First }));
    assert!(parallelogram_data(&[P2::new(0, 0), P2::new(2, 0), P2::new(0, 1), P2::new(2, 1)], 2).is_empty());
}

#[test]
fn combine_rules() {
    use RealValue::*;
    assert_eq!(combine([Known(2), Undetermined, Known(0)]), Known(0));
    assert_eq!(combine([Known(2), Undetermined]), Undetermined);
    assert_eq!(combine([Known(2), Known(4)]), Known(8));
    assert_eq!(combine([]), Known(1));
    assert_eq!(Undetermined.to_string(), "undet.");
    assert_eq!(Undetermined.lower_bound(), 0);
}

#[test]
fn plan_examples() {
    assert_eq!(mult_of("p31-01"), Multiplicity { complex: 4, real: RealValue::Undetermined });
    // diagonal weight-two cubic over a conic parallelogram
    assert_eq!(find_plan("p32-17").unwrap().tags(), ["3-L12", "2-P10x01", "1"]);
    assert_eq!(mult_of("p32-17"), Multiplicity { complex: 8, real: RealValue::Known(8) });
    assert_eq!(mult_of("z-01"), Multiplicity { complex: 1, real: RealValue::Known(1) });
    // the conic string meets the cubic at a vertex
    assert_eq!(mult_of("p32-12"), Multiplicity { complex: 2, real: RealValue::Known(2) });
    let eliminated = evaluate(find_plan("p21-04").unwrap()).unwrap();
    assert_eq!(plan_mult(&eliminated), Err(MultError::NotSeparated("p21-04".into())));
}

#[test]
fn binodal_degree() {
    assert_eq!(vainsencher_degree(3).unwrap(), BigInt::from(280));
    assert_eq!(vainsencher_degree(4).unwrap(), BigInt::from(4860));
    assert_eq!(vainsencher_degree(2), Err(MultError::DegreeOutOfRange(2)));
    assert!(vainsencher_degree(-1).is_err());
}

fn variant() -> impl Strategy<Value = ParallelogramVariant> {
    prop_oneof![Just(ParallelogramVariant::First), Just(ParallelogramVariant::Second)]
}

proptest! {
    #[test]
    fn parity_is_zero_or_two(v in variant(), i in 1i64..=3, k in 0i64..=3, l in 0i64..=3) {
        let r = parallelogram_parity(ParallelogramData { k, l, variant: v }, i);
        prop_assert!(r == 0 || r == 2);
    }

    #[test]
    fn real_never_exceeds_complex(
        i in 1i64..=3,
        kind in prop_oneof![
            Just(GermKind::ParallelogramVertex),
            Just(GermKind::HorizontalWeight2End),
            Just(GermKind::DiagonalWeight2End),
            Just(GermKind::LeftString),
            Just(GermKind::RightString),
            Just(GermKind::TwoDimString),
        ],
        k in 0i64..=3, l in 0i64..=3, v in variant(), consumed in 0i64..=2,
        targets in prop::collection::vec(
            prop_oneof![
                (0i64..=3).prop_map(|column| AlignedTarget::LeftEdge { column }),
                Just(AlignedTarget::RightEdge),
                Just(AlignedTarget::Vertex),
                Just(AlignedTarget::End),
            ],
            1..=2,
        ),
    ) {
        let ctx = GermContext {
            parallelogram: Some(ParallelogramData { k, l, variant: v }),
            aligned: targets,
            consumed_intersections: consumed,
            ..GermContext::new(i)
        };
        let g = germ(kind);
        if let Ok(c) = complex_mult(&g, &ctx) {
            if let RealValue::Known(r) = real_mult(&g, &ctx, ALL_PLUS).unwrap() {
                prop_assert!(r <= c);
            }
        }
    }

    #[test]
    fn unconsumed_diagonal_end_is_fully_real(i in 2i64..=3) {
        let g = germ(GermKind::DiagonalWeight2End);
        let c = complex_mult(&g, &diagonal(i, 0)).unwrap();
        prop_assert_eq!(c, (2 * (i - 1)) as u64);
        prop_assert_eq!(real_mult(&g, &diagonal(i, 0), ALL_PLUS).unwrap(), RealValue::Known(c));
    }
}
