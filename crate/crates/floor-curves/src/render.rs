use std::fmt::Write;

use lattice_core::{lattice_length2, triangle_points, LatticePoint2 as P2};
use serde::Serialize;

use crate::catalog::FloorCurve;
use crate::germ::GermKind;

const UNIT: i64 = 60;
const MARGIN: i64 = 30;

/// Floor summary for JSON export.
#[derive(Clone, Debug, Serialize)]
pub struct FloorDescriptor<'a> {
    pub degree: i64,
    pub tag: &'a str,
    pub label: &'a str,
    pub germs: Vec<GermKind>,
    pub path: &'a [P2],
    pub cells: &'a [Vec<P2>],
}

pub fn descriptor(f: &FloorCurve) -> FloorDescriptor<'_> {
    FloorDescriptor {
        degree: f.degree,
        tag: &f.tag,
        label: &f.label,
        germs: f.germs.iter().map(|g| g.kind).collect(),
        path: &f.path,
        cells: &f.subdivision.cells,
    }
}

/// SVG picture of the dual subdivision: lattice dots, cell edges (long
/// edges drawn thicker) and the marked path in a highlight stroke.
pub fn render_svg(f: &FloorCurve) -> String {
    let d = f.degree;
    let size = 2 * MARGIN + d * UNIT;
    let at = |p: P2| (MARGIN + p.x * UNIT, size - MARGIN - p.y * UNIT);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, f.tag);
    for (a, b) in f.subdivision.edges() {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let w = if lattice_length2(a, b) > 1 { 4 } else { 1 };
        let _ = writeln!(
            s,
            r#"<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{w}"/>"#
        );
    }
    let path: Vec<String> = f.path.iter().map(|&p| {
        let (x, y) = at(p);
        format!("{x},{y}")
    }).collect();
    let _ = writeln!(
        s,
        r#"<polyline class="path" points="{}" fill="none" stroke="crimson" stroke-width="3" stroke-opacity="0.6"/>"#,
        path.join(" ")
    );
    for p in triangle_points(d).expect("valid degree") {
        let (x, y) = at(p);
        let fill = if f.path.contains(&p) { "black" } else { "white" };
        let _ = writeln!(s, r#"<circle class="dot" cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="black"/>"#);
    }
    s.push_str("</svg>\n");
    s
}
