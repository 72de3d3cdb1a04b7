//! The seven acceptance criteria, one PASS or FAIL line each.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use census_cli::{evaluate_placement, run_census, CensusReport};
use floor_curves::mikhalkin::q;
use floor_curves::{Regime, Q};
use floorplan_engine::verdict::classify_cells;
use floorplan_engine::{realize_numeric, FloorPlan, GermPlacement, NodeSite, SeparationVerdict};
use lattice_core::{complexes_intersect, LatticePoint2 as P2, LatticePoint3 as P3};
use multiplicity::{
    complex_mult, germ_contexts, parallelogram_parity, real_mult, vainsencher_degree, ParallelogramData,
    ParallelogramVariant, RealValue, SignVector,
};
use num::BigInt;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(bad.into())
    }
}

fn breakdown(r: &CensusReport, f: impl Fn(&census_cli::PlacementSummary) -> u64) -> Vec<u64> {
    r.placements.iter().map(f).collect()
}

fn complex_census(r: &CensusReport, elapsed: Duration) -> Outcome {
    let per = breakdown(r, |p| p.complex);
    check(
        r.totals.plans == 39 && r.totals.complex == 214 && per == [20, 24, 90, 72, 8] && elapsed.as_secs_f64() < 5.0,
        format!("39 plans, complex 214 = {per:?}, {:.2}s", elapsed.as_secs_f64()),
        format!("{} plans, complex {} = {per:?}, {:.2}s", r.totals.plans, r.totals.complex, elapsed.as_secs_f64()),
    )
}

fn real_census(r: &CensusReport) -> Outcome {
    let per = breakdown(r, |p| p.real_lower_bound);
    let listed: BTreeSet<&str> = r.undetermined.iter().map(String::as_str).collect();
    let undetermined: BTreeSet<&str> =
        r.rows.iter().filter(|x| x.real == RealValue::Undetermined).map(|x| x.plan.as_str()).collect();
    check(
        r.totals.real_lower_bound == 58 && per == [16, 4, 34, 4, 0] && listed == undetermined,
        format!("real at least 58 = {per:?}, undetermined {}", r.undetermined.join(" ")),
        format!("real at least {} = {per:?}, listed {listed:?} vs {undetermined:?}", r.totals.real_lower_bound),
    )
}

fn nodal_census() -> Outcome {
    let r = run_census(1).map_err(|e| e.to_string())?;
    let per = breakdown(&r, |p| p.complex);
    check(
        r.totals.complex == 32 && per == [10, 20, 2],
        format!("complex 32 = {per:?}"),
        format!("complex {} = {per:?}", r.totals.complex),
    )
}

fn deficit(r: &CensusReport) -> Outcome {
    let n = vainsencher_degree(3).map_err(|e| e.to_string())?;
    let missing = &n - BigInt::from(r.totals.complex);
    check(
        n == BigInt::from(280) && missing == BigInt::from(66),
        format!("280 binodal cubics, {missing} missing"),
        format!("degree {n}, {missing} missing"),
    )
}

fn inventory(r: &CensusReport) -> Outcome {
    let expected: BTreeSet<(&str, &str)> = [
        ("(2,1)", "prism-with-two-pyramids"),
        ("(3,2)", "prism-with-two-pyramids"),
        ("(3,2)", "right-string-weight-two-vertex"),
        ("(3,2)", "shared-tetrahedron"),
        ("(3,2)", "right-string-square-vertex"),
        ("(3,2)", "bipyramid-with-weight-two"),
        ("(3,2)", "pentatope-with-weight-two"),
        ("(2,2)", "weight-two-string-inner"),
        ("(2,2)", "weight-two-string-outer"),
        ("(3,3)", "weight-three"),
    ]
    .into_iter()
    .collect();
    let prospects: BTreeSet<(&str, &str)> = [
        ("(2,2)", "2-F00.L10"),
        ("(2,2)", "2-F02.L11"),
        ("(2,2)", "2-L01.F02"),
        ("(2,2)", "2-F00.F10"),
        ("(2,2)", "2-F02.F11"),
        ("(2,2)", "2-F01.F02"),
        ("(3,3)", "3-L21.F30"),
        ("(3,3)", "3-F21.F30"),
    ]
    .into_iter()
    .collect();
    let got: BTreeSet<(&str, &str)> = r.unseparated.iter().map(|e| (e.placement.as_str(), e.tag.as_str())).collect();
    let got_p: BTreeSet<(&str, &str)> = r.prospects.iter().map(|p| (p.placement.as_str(), p.floor.as_str())).collect();
    let classes: BTreeSet<&str> = got.iter().map(|x| x.1).collect();
    check(
        got == expected && got_p == prospects,
        format!("{} complex classes, {} prospects", classes.len(), got_p.len()),
        format!(
            "missing {:?} extra {:?}; prospects missing {:?} extra {:?}",
            expected.difference(&got).collect::<Vec<_>>(),
            got.difference(&expected).collect::<Vec<_>>(),
            prospects.difference(&got_p).collect::<Vec<_>>(),
            got_p.difference(&prospects).collect::<Vec<_>>()
        ),
    )
}

fn sites(plans: &[FloorPlan]) -> Vec<(&str, &NodeSite)> {
    plans
        .iter()
        .filter_map(|p| match &p.verdict {
            Some(SeparationVerdict::Separated(s)) => Some(s.iter().map(move |x| (p.id.as_str(), x))),
            _ => None,
        })
        .flatten()
        .collect()
}

fn properties(plans: &[FloorPlan]) -> Outcome {
    let all = sites(plans);
    // translation invariance of every node complex of the census
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let classes: Vec<_> = all.iter().map(|(_, s)| classify_cells(s.complex.cells.clone()).unwrap()).collect();
    let translates = runner.run(&(0..all.len(), -50i64..50, -50i64..50, -50i64..50), |(i, x, y, z)| {
        let moved = all[i].1.complex.translate(P3::new(x, y, z));
        assert_eq!(classify_cells(moved.cells).unwrap(), classes[i], "{}", all[i].0);
        Ok(())
    });
    if let Err(e) = translates {
        return Err(format!("translation: {e}"));
    }
    let mut pairs = 0;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            pairs += 1;
            if complexes_intersect(&a.1.complex, &b.1.complex) != complexes_intersect(&b.1.complex, &a.1.complex) {
                return Err(format!("asymmetric intersection {} / {}", a.0, b.0));
            }
        }
    }
    let separated: Vec<&FloorPlan> = plans.iter().filter(|p| p.is_separated()).collect();
    if let Some(p) = separated.iter().find(|p| p.floor(2).free_points().contains(&P2::new(2, 0))) {
        return Err(format!("{} is separated with a conic right string", p.id));
    }
    let mut contexts = 0;
    for p in &separated {
        let Some(SeparationVerdict::Separated(s)) = &p.verdict else { unreachable!() };
        for (g, ctx) in germ_contexts(s) {
            contexts += 1;
            let c = complex_mult(&g, &ctx).map_err(|e| e.to_string())?;
            if let RealValue::Known(r) = real_mult(&g, &ctx, SignVector::all_plus(17)).map_err(|e| e.to_string())? {
                if r > c {
                    return Err(format!("{}: real {r} above complex {c}", p.id));
                }
            }
        }
    }
    for variant in [ParallelogramVariant::First, ParallelogramVariant::Second] {
        for i in 1..=3 {
            for k in 0..=3 {
                for l in 0..=3 {
                    let v = parallelogram_parity(ParallelogramData { k, l, variant }, i);
                    if v != 0 && v != 2 {
                        return Err(format!("parity {v} at {variant:?} i={i} k={k} l={l}"));
                    }
                }
            }
        }
    }
    Ok(format!("1000 translates, {pairs} intersection pairs, {contexts} germ contexts, 128 parallelograms"))
}

fn realization(plans: &[FloorPlan]) -> Outcome {
    let start = Instant::now();
    let regime = Regime::canonical();
    let mut failed = Vec::new();
    let mut n = 0;
    for p in plans.iter().filter(|p| p.is_separated()) {
        n += 1;
        let eta: Q = regime.eta.clone();
        match realize_numeric(p, eta, regime.spacing.clone()) {
            Ok(r) if r.passed && r.points.len() == 17 => {}
            Ok(r) => failed.push(format!("{} ({})", p.id, r.failure.unwrap_or_default())),
            Err(e) => failed.push(format!("{} ({e})", p.id)),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        failed.is_empty() && n == 39 && secs < 60.0 && regime.spacing > q(1),
        format!("{n} plans realize at eta {} in {secs:.2}s", regime.eta),
        format!("{n} plans, failures: {}; {secs:.2}s", failed.join(", ")),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = match run_census(2) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL census could not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let elapsed = start.elapsed();
    let plans: Vec<FloorPlan> =
        GermPlacement::BINODAL.iter().flat_map(|&p| evaluate_placement(p).expect("placement evaluates")).collect();
    let results = [
        ("1 binodal complex census", complex_census(&report, elapsed)),
        ("2 binodal real census", real_census(&report)),
        ("3 nodal census", nodal_census()),
        ("4 binodal degree and deficit", deficit(&report)),
        ("5 unseparated inventory and prospects", inventory(&report)),
        ("6 property suites", properties(&plans)),
        ("7 numeric realization", realization(&plans)),
    ];
    let mut ok = true;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                ok = false;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
