//! Deterministic SVG renderings of subdivisions and planar curves.

use std::fmt::Write;

use tropdual::curve::{QPoint, TropicalCurve};
use tropdual::{Rational, Subdivision};

use crate::error::{CliError, Result};

/// Pixels per lattice unit in the polytope panel.
pub const LATTICE_PX: f64 = 64.0;
/// Extra world units around the curve's vertices.
pub const RAY_OVERHANG: f64 = 2.0;
const MARGIN: f64 = 32.0;
const CURVE_PX: f64 = 384.0;
const GAP: f64 = 24.0;

pub struct Panel {
    pub width: f64,
    pub height: f64,
    pub body: String,
}

fn f(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn xy(e: &[i64]) -> (f64, f64) {
    (e[0] as f64, e.get(1).copied().unwrap_or(0) as f64)
}

pub fn polytope_panel(s: &Subdivision) -> Result<Panel> {
    if s.polytope.nvars > 2 {
        return Err(CliError::Unsupported(format!("cannot draw a polytope in {} dimensions", s.polytope.nvars)));
    }
    let cells = s.cells.as_deref().unwrap_or(&[]);
    let nodes: Vec<(f64, f64)> = s.polytope.lattice_nodes.iter().map(|e| xy(e)).collect();
    let min_x = nodes.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = nodes.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = nodes.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = nodes.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let px = |p: (f64, f64)| (MARGIN + LATTICE_PX * (p.0 - min_x), MARGIN + LATTICE_PX * (max_y - p.1));

    let mut body = String::new();
    for c in cells {
        let pts: Vec<String> = c.corners.iter().map(|e| px(xy(e))).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        if pts.len() >= 3 {
            writeln!(
                body,
                r##"<polygon points="{}" fill="#dbe7f3" stroke="#1f4e79" stroke-width="2"/>"##,
                pts.join(" ")
            )
            .unwrap();
        } else if pts.len() == 2 {
            writeln!(body, r##"<polyline points="{}" fill="none" stroke="#1f4e79" stroke-width="2"/>"##, pts.join(" "))
                .unwrap();
        }
    }
    for e in &s.polytope.lattice_nodes {
        let (x, y) = px(xy(e));
        let fill = if s.appearing_nodes.contains(e) { "#1f4e79" } else { "#ffffff" };
        writeln!(
            body,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{fill}" stroke="#1f4e79" stroke-width="1.5"/>"##
        )
        .unwrap();
    }
    Ok(Panel {
        width: 2.0 * MARGIN + LATTICE_PX * (max_x - min_x),
        height: 2.0 * MARGIN + LATTICE_PX * (max_y - min_y),
        body,
    })
}

pub fn curve_panel(c: &TropicalCurve) -> Panel {
    let mut anchors: Vec<QPoint> = c.vertices.clone();
    anchors.extend(c.lines.iter().map(|l| l.point));
    let pts: Vec<(f64, f64)> = anchors.iter().map(|p| (f(p[0]), f(p[1]))).collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = if pts.is_empty() {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        (
            pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min),
            pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max),
            pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min),
            pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max),
        )
    };
    min_x -= RAY_OVERHANG;
    max_x += RAY_OVERHANG;
    min_y -= RAY_OVERHANG;
    max_y += RAY_OVERHANG;
    let span = (max_x - min_x).max(max_y - min_y);
    let scale = CURVE_PX / span;
    let px = |p: (f64, f64)| ((p.0 - min_x) * scale, (max_y - p.1) * scale);
    let reach = 2.0 * span;
    let (w, h) = ((max_x - min_x) * scale, (max_y - min_y) * scale);

    let mut body = String::new();
    writeln!(body, r##"<svg x="{MARGIN}" y="{MARGIN}" width="{w:.2}" height="{h:.2}" overflow="hidden">"##).unwrap();
    writeln!(body, r##"<rect width="{w:.2}" height="{h:.2}" fill="#fafafa" stroke="#cccccc"/>"##).unwrap();
    let mut segment = |a: (f64, f64), b: (f64, f64)| {
        let (a, b) = (px(a), px(b));
        writeln!(
            body,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#a61c00" stroke-width="2"/>"##,
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    };
    let v = |k: usize| (f(c.vertices[k][0]), f(c.vertices[k][1]));
    for e in &c.edges {
        segment(v(e.from), v(e.to));
    }
    for r in &c.rays {
        let (x, y) = v(r.from);
        segment((x, y), (x + reach * r.direction[0] as f64, y + reach * r.direction[1] as f64));
    }
    for l in &c.lines {
        let (x, y) = (f(l.point[0]), f(l.point[1]));
        let (dx, dy) = (l.direction[0] as f64 * reach, l.direction[1] as f64 * reach);
        segment((x - dx, y - dy), (x + dx, y + dy));
    }
    for k in 0..c.vertices.len() {
        let (x, y) = px(v(k));
        writeln!(body, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#a61c00"/>"##).unwrap();
    }
    body.push_str("</svg>\n");
    Panel { width: w + 2.0 * MARGIN, height: h + 2.0 * MARGIN, body }
}

/// Places panels left to right in one SVG 1.1 document.
pub fn document(panels: &[Panel]) -> String {
    let width: f64 = panels.iter().map(|p| p.width).sum::<f64>() + GAP * panels.len().saturating_sub(1) as f64;
    let height = panels.iter().map(|p| p.height).fold(0.0, f64::max);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    let mut x = 0.0;
    for p in panels {
        writeln!(out, r#"<g transform="translate({x:.2},0)">"#).unwrap();
        out.push_str(&p.body);
        out.push_str("</g>\n");
        x += p.width + GAP;
    }
    out.push_str("</svg>\n");
    out
}
