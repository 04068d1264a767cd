//! Planar tropical curves as the 1-complex dual to the induced subdivision.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::{Exponent, Sign, TropPolynomial};
use crate::semiring::Rational;
use crate::subdivision::{induced_subdivision, Subdivision};

pub type QPoint = [Rational; 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveEdge {
    pub from: usize,
    pub to: usize,
    /// The subdivision edge this segment is dual to.
    pub dual: [Exponent; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRay {
    pub from: usize,
    /// Primitive integer direction.
    pub direction: [i64; 2],
    pub dual: [Exponent; 2],
}

/// A full line, dual to a segment cell of a one-dimensional Newton polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveLine {
    pub point: QPoint,
    pub direction: [i64; 2],
    pub dual: [Exponent; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCurve {
    pub sign: Sign,
    /// One vertex per two-dimensional cell, in cell order.
    pub vertices: Vec<QPoint>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
    pub lines: Vec<CurveLine>,
}

impl TropicalCurve {
    pub fn one_cell_count(&self) -> usize {
        self.edges.len() + self.rays.len() + self.lines.len()
    }

    /// Exact membership test for a point of the plane.
    pub fn contains(&self, x: &QPoint) -> bool {
        self.vertices.iter().any(|v| v == x)
            || self.edges.iter().any(|e| on_segment(&self.vertices[e.from], &self.vertices[e.to], x))
            || self.rays.iter().any(|r| on_ray(&self.vertices[r.from], r.direction, x))
            || self.lines.iter().any(|l| on_line(&l.point, l.direction, x))
    }

    /// Direction vectors of every 1-cell paired with its dual edge vector.
    pub fn cell_directions(&self) -> Vec<([Rational; 2], [i64; 2])> {
        let edge_vec = |d: &[Exponent; 2]| -> [i64; 2] {
            let (a, b) = (pad(&d[0]), pad(&d[1]));
            [b[0] - a[0], b[1] - a[1]]
        };
        let mut out = Vec::new();
        for e in &self.edges {
            let (p, q) = (&self.vertices[e.from], &self.vertices[e.to]);
            out.push(([q[0] - p[0], q[1] - p[1]], edge_vec(&e.dual)));
        }
        for r in &self.rays {
            out.push((r.direction.map(Rational::from_integer), edge_vec(&r.dual)));
        }
        for l in &self.lines {
            out.push((l.direction.map(Rational::from_integer), edge_vec(&l.dual)));
        }
        out
    }
}

fn pad(e: &[i64]) -> [i64; 2] {
    [e[0], e.get(1).copied().unwrap_or(0)]
}

fn cross_q(u: &QPoint, v: &QPoint) -> Rational {
    u[0] * v[1] - u[1] * v[0]
}

fn dot_q(u: &QPoint, v: &QPoint) -> Rational {
    u[0] * v[0] + u[1] * v[1]
}

fn diff(a: &QPoint, b: &QPoint) -> QPoint {
    [a[0] - b[0], a[1] - b[1]]
}

fn on_segment(p: &QPoint, q: &QPoint, x: &QPoint) -> bool {
    let (d, w) = (diff(q, p), diff(x, p));
    cross_q(&d, &w).is_zero() && !dot_q(&d, &w).is_negative() && dot_q(&d, &w) <= dot_q(&d, &d)
}

fn on_ray(p: &QPoint, dir: [i64; 2], x: &QPoint) -> bool {
    let d = dir.map(Rational::from_integer);
    let w = diff(x, p);
    cross_q(&d, &w).is_zero() && !dot_q(&d, &w).is_negative()
}

fn on_line(p: &QPoint, dir: [i64; 2], x: &QPoint) -> bool {
    cross_q(&dir.map(Rational::from_integer), &diff(x, p)).is_zero()
}

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = v[0].gcd(&v[1]);
    [v[0] / g, v[1] / g]
}

/// Corner locus of `x ↦ max_ω (ω·x - sign·a_ω)` for a bivariate polynomial.
pub fn tropical_curve(f: &TropPolynomial, sign: Sign) -> Result<TropicalCurve> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedShape(format!("curves need two variables, got {}", f.nvars())));
    }
    let s = induced_subdivision(f, sign)?;
    Ok(curve_from_subdivision(&s))
}

/// Dual 1-complex of a planar subdivision.
pub fn curve_from_subdivision(s: &Subdivision) -> TropicalCurve {
    let cells = s.cells.as_deref().unwrap_or(&[]);
    let mut curve =
        TropicalCurve { sign: s.sign, vertices: Vec::new(), edges: Vec::new(), rays: Vec::new(), lines: Vec::new() };
    match s.polytope.dim {
        0 => {}
        1 => {
            for c in cells {
                let (a, b) = (pad(&c.corners[0]), pad(&c.corners[1]));
                let d = primitive([b[0] - a[0], b[1] - a[1]]);
                // the endpoint terms tie exactly on d·x = slope (slope per primitive step)
                let sigma = c.slope[0];
                let norm = Rational::from_integer(d[0] * d[0] + d[1] * d[1]);
                let base = [sigma * d[0] / norm, sigma * d[1] / norm];
                curve.lines.push(CurveLine {
                    point: base,
                    direction: [-d[1], d[0]],
                    dual: [c.corners[0].clone(), c.corners[1].clone()],
                });
            }
        }
        _ => {
            curve.vertices = cells.iter().map(|c| [c.slope[0], c.slope[1]]).collect();
            for e in &s.edges {
                if e.is_interior() {
                    curve.edges.push(CurveEdge { from: e.cells[0], to: e.cells[1], dual: e.endpoints.clone() });
                } else {
                    let (a, b) = (pad(&e.endpoints[0]), pad(&e.endpoints[1]));
                    // outward normal of a counter-clockwise boundary edge
                    let dir = primitive([b[1] - a[1], a[0] - b[0]]);
                    curve.rays.push(CurveRay { from: e.cells[0], direction: dir, dual: e.endpoints.clone() });
                }
            }
        }
    }
    curve
}
