use std::collections::BTreeSet;

use floor_curves::mikhalkin::path_heights;
use floor_curves::realize::check_floor;
use floor_curves::{catalog, smooth_floor, FloorCurve, Regime, Q};
use num::BigInt;
use proptest::prelude::*;

fn all_floors() -> Vec<FloorCurve> {
    let mut out = Vec::new();
    for (d, g) in [(3, 0), (2, 0), (1, 0), (3, 1), (2, 1), (1, 1), (3, 2), (2, 2)] {
        out.extend(catalog(d, g).unwrap().iter().cloned());
    }
    out
}

#[test]
fn point_count_matches_germs() {
    for f in all_floors() {
        let n = ((f.degree + 2) * (f.degree + 1) / 2) as usize;
        assert_eq!(f.point_count(), n - 1 - f.germ_count(), "{}", f.tag);
        assert_eq!(f.path.len() + f.omissions.len(), n, "{}", f.tag);
    }
}

#[test]
fn path_is_column_major() {
    for f in all_floors() {
        let mut sorted = f.path.clone();
        sorted.sort();
        assert_eq!(sorted, f.path, "{}", f.tag);
    }
}

#[test]
fn catalogs_are_duplicate_free() {
    for (d, g) in [(3, 1), (2, 1), (3, 2), (2, 2)] {
        let c = catalog(d, g).unwrap();
        let tags: BTreeSet<&str> = c.iter().map(|f| f.tag.as_str()).collect();
        assert_eq!(tags.len(), c.len());
        let shapes: BTreeSet<_> = c.iter().map(|f| &f.omissions).collect();
        assert_eq!(shapes.len(), c.len());
    }
}

#[test]
fn line_floors_only_carry_left_strings() {
    for f in catalog(1, 1).unwrap().iter() {
        assert!(f.germs.iter().all(|g| g.kind == floor_curves::GermKind::LeftString));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Smooth floors realize at any sufficiently stretched configuration.
    #[test]
    fn smooth_floors_are_stable(d in 1i64..=3, den in 16i64..400, exp in 12u32..30) {
        let f = smooth_floor(d).unwrap();
        let regime = Regime::new(Q::new(1.into(), den.into()), Q::from_integer(BigInt::from(2).pow(exp)));
        let pts: Vec<(Q, Q)> = (1..=f.point_count()).map(|j| regime.projection(j)).collect();
        let h = path_heights(&f.path, &pts);
        let sub = check_floor(d, &f.path, &f.omissions, &h, &pts).unwrap();
        prop_assert_eq!(sub.cells, f.subdivision.cells);
    }
}
