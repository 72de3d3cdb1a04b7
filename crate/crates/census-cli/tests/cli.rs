use std::process::Command;
use std::sync::OnceLock;

use census_cli::*;
use floorplan_engine::EngineError;

fn binodal() -> &'static CensusReport {
    static R: OnceLock<CensusReport> = OnceLock::new();
    R.get_or_init(|| run_census(2).unwrap())
}

fn tropicount(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_tropicount")).args(args).output().unwrap()
}

#[test]
fn json_round_trip_is_byte_identical() {
    let text = export_json(binodal()).unwrap();
    let back = parse_json(&text).unwrap();
    assert_eq!(&back, binodal());
    assert_eq!(export_json(&back).unwrap(), text);
    assert!(text.contains("\"schema\": \"tropicount/1\""));
}

#[test]
fn table_has_a_subtotal_per_placement() {
    let t = export_table(binodal());
    assert_eq!(t.lines().filter(|l| l.contains("subtotal")).count(), 5);
    assert!(t.contains("total    39 plans, complex 214, real at least 58"));
    assert!(t.lines().any(|l| l.starts_with("(3,1)    p31-01") && l.contains("undet.")));
}

#[test]
fn inventory_lists_shared_tetrahedra() {
    let e = binodal().unseparated.iter().find(|e| e.tag == "shared-tetrahedron").unwrap();
    assert_eq!((e.placement.as_str(), e.count), ("(3,2)", 2));
}

#[test]
fn candidates_are_conserved() {
    let r = binodal();
    for p in &r.placements {
        assert_eq!(p.candidates, p.separated + p.unseparated + p.eliminated, "{}", p.placement);
        let rows: Vec<_> = r.rows.iter().filter(|x| x.placement == p.placement).collect();
        assert_eq!(rows.len(), p.separated);
        assert_eq!(rows.iter().map(|x| x.complex).sum::<u64>(), p.complex);
    }
    let inventoried: usize = r.unseparated.iter().map(|e| e.count).sum();
    assert_eq!(inventoried, r.placements.iter().map(|p| p.unseparated).sum::<usize>());
    assert!(golden_mismatches(r).is_empty());
}

#[test]
fn census_is_deterministic() {
    assert_eq!(export_json(&run_census(2).unwrap()).unwrap(), export_json(binodal()).unwrap());
}

#[test]
fn small_censuses() {
    let r = run_census(0).unwrap();
    assert_eq!((r.totals.plans, r.totals.complex, r.totals.real_lower_bound), (1, 1, 1));
    assert!(golden_mismatches(&r).is_empty());
    assert!(matches!(run_census(3), Err(CensusError::UnsupportedDelta(3))));
}

#[test]
fn render_writes_one_svg_per_floor() {
    let dir = tempfile::tempdir().unwrap();
    let files = render("p32-17", dir.path()).unwrap();
    assert_eq!(files.len(), 3);
    for f in &files {
        assert!(std::fs::read_to_string(f).unwrap().starts_with("<svg"));
    }
    assert!(files[0].ends_with("p32-17-C3.svg"));
    assert!(matches!(render("p32-99", dir.path()), Err(CensusError::Engine(EngineError::NoSuchPlan(_)))));
}

#[test]
fn binary_census_and_errors() {
    let ok = tropicount(&["census", "--format", "json"]);
    assert!(ok.status.success());
    let r = parse_json(std::str::from_utf8(&ok.stdout).unwrap()).unwrap();
    assert_eq!(r.totals.complex, 214);
    let bad = tropicount(&["census", "--delta", "5"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unsupported node count 5"));
}

#[test]
fn binary_realize() {
    let ok = tropicount(&["realize", "--plan", "p31-01"]);
    assert!(ok.status.success());
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["points"].as_array().unwrap().len(), 17);
    let eliminated = tropicount(&["realize", "--plan", "p21-04"]);
    assert_eq!(eliminated.status.code(), Some(2));
    let unknown = tropicount(&["realize", "--plan", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn binary_floors_and_render() {
    let out = tropicount(&["floors", "--degree", "3", "--germs", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("3-L12")));
    let dir = tempfile::tempdir().unwrap();
    let out = tropicount(&["render", "--plan", "z-01", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 3);
}
