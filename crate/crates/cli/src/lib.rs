//! Front end for the `tropdual` binary: input documents, reports and SVG.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod input;
pub mod svg;

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::PathBuf;

use tropdual::classical::{dual_plane_curve, generic_conic_form};
use tropdual::curve::curve_from_subdivision;
use tropdual::quadric::{
    classify_by_distortion, distortion_matrix, matrix_from_poly, quadric_det, RegularityStatus, RegularityWitness,
};
use tropdual::subdivision::is_complete;
use tropdual::symbolic::{sym_adjoint, SymbolicMatrix};
use tropdual::tropicalize::tropicalize;
use tropdual::{
    dual_quadric, induced_subdivision, is_regular, node_classification, poly_from_matrix, QuadricMatrix, Sign,
    Subdivision, TropPolynomial, TropValue,
};

pub use error::{CliError, Result};
pub use input::{parse_input, serialize, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Subdivide,
    Curve,
    Dual,
    Regularity,
    OracleCheck,
    Render,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: PathBuf,
    pub sign: Sign,
    pub svg: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub report: String,
    pub svg: Option<String>,
}

/// Largest matrix the symbolic oracle expands.
pub const ORACLE_MAX_SIZE: usize = 6;

/// Reads the input, executes the command and writes the requested files.
/// Returns the report; it is also written to `job.out` when given.
pub fn run(job: &JobSpec) -> Result<Output> {
    let bytes = std::fs::read(&job.input).map_err(|source| CliError::Read { path: job.input.clone(), source })?;
    let input = parse_input(&bytes)?;
    let output = execute(job.command, &input, job.sign, job.svg.is_some())?;
    if let (Some(path), Some(svg)) = (&job.svg, &output.svg) {
        std::fs::write(path, svg).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    if let Some(path) = &job.out {
        std::fs::write(path, &output.report).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    Ok(output)
}

/// Runs one command on parsed input. `render` always produces SVG; other
/// commands only when `want_svg` is set.
pub fn execute(command: Command, input: &Input, sign: Sign, want_svg: bool) -> Result<Output> {
    match command {
        Command::Subdivide => {
            let s = induced_subdivision(&as_poly(input)?, sign)?;
            let svg = if want_svg { Some(svg::document(&[svg::polytope_panel(&s)?])) } else { None };
            Ok(Output { report: subdivision_report(&s)?, svg })
        }
        Command::Curve => {
            let s = planar_subdivision(input, sign)?;
            let c = curve_from_subdivision(&s);
            let svg = want_svg.then(|| svg::document(&[svg::curve_panel(&c)]));
            Ok(Output { report: curve_report(&c), svg })
        }
        Command::Render => {
            let s = planar_subdivision(input, sign)?;
            let c = curve_from_subdivision(&s);
            let doc = svg::document(&[svg::polytope_panel(&s)?, svg::curve_panel(&c)]);
            let report = format!(
                "rendered subdivision with {} cells and curve with {} vertices\n",
                count_cells(&s),
                c.vertices.len()
            );
            Ok(Output { report, svg: Some(doc) })
        }
        Command::Dual => {
            let a = as_matrix(input)?;
            let d = dual_quadric(&a)?;
            let mut r = String::new();
            writeln!(r, "dual coefficients: {}", join(&d.coefficients())).unwrap();
            writeln!(r, "dual matrix:").unwrap();
            write!(r, "{d}").unwrap();
            Ok(Output { report: r, svg: None })
        }
        Command::Regularity => Ok(Output { report: regularity_report(&as_matrix(input)?)?, svg: None }),
        Command::OracleCheck => Ok(Output { report: oracle_report(&as_matrix(input)?)?, svg: None }),
    }
}

fn as_poly(input: &Input) -> Result<TropPolynomial> {
    match input {
        Input::Poly(f) => Ok(f.clone()),
        Input::Matrix(a) => Ok(poly_from_matrix(a)?),
    }
}

fn as_matrix(input: &Input) -> Result<QuadricMatrix> {
    match input {
        Input::Matrix(a) => Ok(a.clone()),
        Input::Poly(f) => matrix_from_poly(f).map_err(|e| CliError::Unsupported(format!("not a quadric: {e}"))),
    }
}

fn planar_subdivision(input: &Input, sign: Sign) -> Result<Subdivision> {
    let f = as_poly(input)?;
    if f.nvars() != 2 {
        return Err(CliError::Unsupported(format!("curves need two variables, got {}", f.nvars())));
    }
    Ok(induced_subdivision(&f, sign)?)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn exp(e: &[i64]) -> String {
    format!("({})", e.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn point(p: &tropdual::curve::QPoint) -> String {
    format!("({}, {})", p[0], p[1])
}

fn count_cells(s: &Subdivision) -> usize {
    s.cells.as_ref().map_or(0, Vec::len)
}

fn subdivision_report(s: &Subdivision) -> Result<String> {
    let mut r = String::new();
    let sign = match s.sign {
        Sign::Examples => "examples",
        Sign::Kapranov => "kapranov",
    };
    writeln!(r, "sign: {sign}").unwrap();
    writeln!(
        r,
        "polytope: dimension {}, vertices {}",
        s.polytope.dim,
        s.polytope.vertices.iter().map(|e| exp(e)).collect::<Vec<_>>().join(" ")
    )
    .unwrap();
    writeln!(r, "lattice nodes: {}", s.polytope.lattice_nodes.len()).unwrap();
    if let Some(cells) = &s.cells {
        writeln!(r, "cells: {}", cells.len()).unwrap();
        for (k, c) in cells.iter().enumerate() {
            let corners: Vec<String> = c.corners.iter().map(|e| exp(e)).collect();
            let points: Vec<String> = c.points.iter().map(|e| exp(e)).collect();
            writeln!(r, "  cell {}: corners {}; points {}", k + 1, corners.join(" "), points.join(" ")).unwrap();
        }
        let interior = s.edges.iter().filter(|e| e.is_interior()).count();
        writeln!(r, "edges: {} ({} interior, {} boundary)", s.edges.len(), interior, s.edges.len() - interior).unwrap();
    }
    writeln!(r, "appearing nodes: {}", s.appearing_nodes.iter().map(|e| exp(e)).collect::<Vec<_>>().join(" ")).unwrap();
    writeln!(r, "classification: {}", node_classification(s).as_str()).unwrap();
    if s.polytope.nvars == 2 {
        writeln!(r, "complete: {}", if is_complete(s)? { "yes" } else { "no" }).unwrap();
    }
    Ok(r)
}

fn curve_report(c: &tropdual::TropicalCurve) -> String {
    let mut r = String::new();
    writeln!(r, "vertices: {}", c.vertices.len()).unwrap();
    for (k, v) in c.vertices.iter().enumerate() {
        writeln!(r, "  v{}: {}", k + 1, point(v)).unwrap();
    }
    writeln!(r, "edges: {}", c.edges.len()).unwrap();
    for e in &c.edges {
        writeln!(r, "  v{} - v{}, dual to {} {}", e.from + 1, e.to + 1, exp(&e.dual[0]), exp(&e.dual[1])).unwrap();
    }
    writeln!(r, "rays: {}", c.rays.len()).unwrap();
    for ray in &c.rays {
        writeln!(
            r,
            "  v{} direction ({}, {}), dual to {} {}",
            ray.from + 1,
            ray.direction[0],
            ray.direction[1],
            exp(&ray.dual[0]),
            exp(&ray.dual[1])
        )
        .unwrap();
    }
    if !c.lines.is_empty() {
        writeln!(r, "lines: {}", c.lines.len()).unwrap();
        for l in &c.lines {
            writeln!(r, "  through {} direction ({}, {})", point(&l.point), l.direction[0], l.direction[1]).unwrap();
        }
    }
    r
}

fn regularity_report(a: &QuadricMatrix) -> Result<String> {
    let v = is_regular(a)?;
    let mut r = String::new();
    match (v.status, v.witness) {
        (RegularityStatus::Regular, _) => {
            writeln!(r, "regular, lifting_constant = {}", v.lifting_constant.expect("regular verdicts carry λ"))
                .unwrap()
        }
        (status, Some(RegularityWitness::Differs { reference, offending })) => writeln!(
            r,
            "{}, witness ({},{}) vs ({},{})",
            status.as_str(),
            reference.0,
            reference.1,
            offending.0,
            offending.1
        )
        .unwrap(),
        (status, Some(RegularityWitness::InfinityMismatch { at })) => {
            writeln!(r, "{}, witness ({},{})", status.as_str(), at.0, at.1).unwrap()
        }
        (status, None) => writeln!(r, "{}", status.as_str()).unwrap(),
    }
    writeln!(r, "double dual coefficients: {}", join(&v.double_dual.coefficients())).unwrap();
    let det = quadric_det(a)?;
    writeln!(r, "tropical determinant: {}, achievers {}", det.value, det.achiever_count).unwrap();
    if let Ok(e) = distortion_matrix(a) {
        writeln!(r, "distortion: {}", classify_by_distortion(&e).as_str()).unwrap();
    }
    Ok(r)
}

/// Compares the tropical adjoint with the tropicalized classical adjoint
/// entrywise and, for conics, with the tropicalized resultant dual.
fn oracle_report(a: &QuadricMatrix) -> Result<String> {
    let n = a.size();
    if !(2..=ORACLE_MAX_SIZE).contains(&n) {
        return Err(CliError::Unsupported(format!("oracle supports sizes 2 to {ORACLE_MAX_SIZE}, got {n}")));
    }
    let dual = dual_quadric(a)?;
    let names = SymbolicMatrix::generic_symmetric_names(n);
    let mut val = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            val.insert(names[i][j].clone(), a.get(i, j));
        }
    }
    let star = sym_adjoint(&SymbolicMatrix::generic_symmetric(n))?;
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in i..n {
            let classical = tropicalize(star.get(i, j), &val, &[])?.value().expect("no free variables");
            if classical != dual.get(i, j) {
                mismatches.push(format!(
                    "({},{}): adjoint {} vs classical {}",
                    i + 1,
                    j + 1,
                    dual.get(i, j),
                    classical
                ));
            }
        }
    }
    let entries = n * (n + 1) / 2;
    let mut r = format!("adjoint route: {}/{} entries agree\n", entries - mismatches.len(), entries);
    if n == 3 {
        let resultant = resultant_mismatches(&dual, &val)?;
        writeln!(r, "resultant route: {}", if resultant.is_empty() { "agrees" } else { "differs" }).unwrap();
        mismatches.extend(resultant);
    }
    if mismatches.is_empty() {
        Ok(r)
    } else {
        Err(CliError::OracleMismatch(mismatches.join("; ")))
    }
}

fn resultant_mismatches(dual: &QuadricMatrix, val: &BTreeMap<String, TropValue>) -> Result<Vec<String>> {
    let curve = dual_plane_curve(&generic_conic_form())?;
    // line coordinates in the index order of the matrix
    let coords = ["alpha1", "alpha2", "alpha0"];
    let got = match tropicalize(&curve.projective, val, &coords)? {
        tropdual::tropicalize::Tropicalized::Poly(p) => p,
        tropdual::tropicalize::Tropicalized::Value(_) => unreachable!("free variables requested"),
    };
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            let mut e = vec![0i64; 3];
            e[i] += 1;
            e[j] += 1;
            if got.coefficient(&e) != dual.get(i, j) {
                out.push(format!("resultant ({},{}): {} vs {}", i + 1, j + 1, got.coefficient(&e), dual.get(i, j)));
            }
        }
    }
    Ok(out)
}
