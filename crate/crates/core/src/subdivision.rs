//! Newton polytopes and the regular subdivisions induced by coefficient
//! liftings.
//!
//! Supports with at most two variables are handled by an exact lower-hull
//! computation over the lifted points `(ω, sign·a_ω)`. Quadrics in more
//! variables are classified node by node: the Newton polytope is the
//! simplex `2Δ_n`, every non-vertex lattice node is the midpoint of an
//! edge, and it is a 0-cell exactly when its lifted height lies strictly
//! below the chord of the two edge endpoints.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::{Exponent, Sign, TropPolynomial};
use crate::semiring::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolytope {
    pub nvars: usize,
    /// Affine dimension of the hull.
    pub dim: usize,
    /// Corners of the hull. Counter-clockwise for planar polygons.
    pub vertices: Vec<Exponent>,
    /// Every lattice point of the hull, sorted.
    pub lattice_nodes: Vec<Exponent>,
}

/// The lifted point set `{(ω, h_ω)}` with `h_ω = sign·a_ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPoints {
    pub sign: Sign,
    pub points: Vec<(Exponent, Rational)>,
}

impl LiftedPoints {
    pub fn new(f: &TropPolynomial, sign: Sign) -> Self {
        let points =
            f.terms().map(|(e, a)| (e.clone(), sign.apply(a.finite().expect("finite coefficients only")))).collect();
        LiftedPoints { sign, points }
    }

    pub fn height(&self, exp: &[i64]) -> Option<Rational> {
        self.points.iter().find(|(e, _)| e.as_slice() == exp).map(|(_, h)| *h)
    }
}

/// A maximal cell of a planar subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Corners in counter-clockwise order (two endpoints for a segment cell).
    pub corners: Vec<Exponent>,
    /// Support points whose lifts lie on this cell's lower face.
    pub points: Vec<Exponent>,
    /// Slope of the lower face: `h = slope·ω + offset` on the cell. For
    /// segment cells the slope is along the primitive direction of the
    /// segment and has one component.
    pub slope: Vec<Rational>,
}

/// A 1-cell of a two-dimensional subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEdge {
    pub endpoints: [Exponent; 2],
    /// Indices into `Subdivision::cells`: one for boundary edges, two for
    /// interior ones. For boundary edges the endpoints follow the
    /// counter-clockwise orientation of the incident cell.
    pub cells: Vec<usize>,
}

impl SubdivisionEdge {
    pub fn is_interior(&self) -> bool {
        self.cells.len() == 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub sign: Sign,
    pub polytope: NewtonPolytope,
    /// Maximal cells. `None` for quadrics in three or more variables,
    /// where only node appearance is decided.
    pub cells: Option<Vec<Cell>>,
    /// 1-cells; only populated for two-dimensional planar subdivisions.
    pub edges: Vec<SubdivisionEdge>,
    /// Lattice points that are 0-cells.
    pub appearing_nodes: BTreeSet<Exponent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeClass {
    MaximalInNodes,
    MinimalInNodes,
    Neither,
}

impl NodeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeClass::MaximalInNodes => "maximal_in_nodes",
            NodeClass::MinimalInNodes => "minimal_in_nodes",
            NodeClass::Neither => "neither",
        }
    }
}

type P2 = [i64; 2];

fn to_p2(e: &[i64]) -> P2 {
    match e {
        [x] => [*x, 0],
        [x, y] => [*x, *y],
        _ => unreachable!("planar routine called with {} variables", e.len()),
    }
}

fn from_p2(p: P2, nvars: usize) -> Exponent {
    p[..nvars].to_vec()
}

fn sub(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(o: P2, a: P2, b: P2) -> i64 {
    let (u, v) = (sub(a, o), sub(b, o));
    u[0] * v[1] - u[1] * v[0]
}

fn primitive(v: P2) -> P2 {
    let g = v[0].gcd(&v[1]);
    [v[0] / g, v[1] / g]
}

/// Strict convex hull (no collinear points), counter-clockwise.
fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts: Vec<P2> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<P2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

fn affine_dim(points: &[P2]) -> usize {
    let p0 = points[0];
    let Some(&p1) = points.iter().find(|&&p| p != p0) else {
        return 0;
    };
    if points.iter().any(|&p| cross(p0, p1, p) != 0) {
        2
    } else {
        1
    }
}

fn planar_polytope(support: &[Exponent], nvars: usize) -> NewtonPolytope {
    let pts: Vec<P2> = support.iter().map(|e| to_p2(e)).collect();
    let dim = affine_dim(&pts);
    let hull = convex_hull(&pts);
    let nodes: Vec<P2> = match dim {
        0 => vec![pts[0]],
        1 => {
            let (a, b) = (hull[0], hull[1]);
            let d = sub(b, a);
            let g = d[0].gcd(&d[1]);
            let step = [d[0] / g, d[1] / g];
            (0..=g).map(|t| [a[0] + t * step[0], a[1] + t * step[1]]).collect()
        }
        _ => {
            let (xmin, xmax) = (hull.iter().map(|p| p[0]).min().unwrap(), hull.iter().map(|p| p[0]).max().unwrap());
            let (ymin, ymax) = (hull.iter().map(|p| p[1]).min().unwrap(), hull.iter().map(|p| p[1]).max().unwrap());
            let mut out = Vec::new();
            for x in xmin..=xmax {
                for y in ymin..=ymax {
                    let p = [x, y];
                    let inside = (0..hull.len()).all(|k| cross(hull[k], hull[(k + 1) % hull.len()], p) >= 0);
                    if inside {
                        out.push(p);
                    }
                }
            }
            out
        }
    };
    let mut lattice_nodes: Vec<Exponent> = nodes.into_iter().map(|p| from_p2(p, nvars)).collect();
    lattice_nodes.sort();
    NewtonPolytope { nvars, dim, vertices: hull.into_iter().map(|p| from_p2(p, nvars)).collect(), lattice_nodes }
}

/// Unit vector `e_i` (0-based) or the zero vector for `i == nvars`, which
/// plays the role of the homogenizing coordinate.
fn unit(nvars: usize, i: usize) -> Exponent {
    let mut e = vec![0; nvars];
    if i < nvars {
        e[i] = 1;
    }
    e
}

/// Exponent of the quadric monomial for the 0-based matrix cell `(i, j)`:
/// `x_i x_j`, with index `nvars` standing for the constant coordinate.
pub fn quadric_exponent(nvars: usize, i: usize, j: usize) -> Exponent {
    unit(nvars, i).iter().zip(unit(nvars, j)).map(|(a, b)| a + b).collect()
}

/// Inverse of [`quadric_exponent`]; `None` outside `2Δ_n`.
pub fn quadric_cell(exp: &[i64]) -> Option<(usize, usize)> {
    let nvars = exp.len();
    if exp.iter().any(|&e| e < 0) || exp.iter().sum::<i64>() > 2 {
        return None;
    }
    let mut idx: Vec<usize> = Vec::with_capacity(2);
    for (k, &e) in exp.iter().enumerate() {
        for _ in 0..e {
            idx.push(k);
        }
    }
    while idx.len() < 2 {
        idx.push(nvars);
    }
    Some((idx[0], idx[1]))
}

fn is_quadric_support(support: &[Exponent]) -> bool {
    support.iter().all(|e| quadric_cell(e).is_some())
}

fn quadric_polytope(nvars: usize) -> NewtonPolytope {
    let n = nvars + 1;
    let vertices: Vec<Exponent> = (0..n).map(|i| quadric_exponent(nvars, i, i)).collect();
    let mut lattice_nodes: Vec<Exponent> =
        (0..n).flat_map(|i| (i..n).map(move |j| quadric_exponent(nvars, i, j))).collect();
    lattice_nodes.sort();
    NewtonPolytope { nvars, dim: nvars, vertices, lattice_nodes }
}

fn require_full_quadric(f: &TropPolynomial) -> Result<()> {
    let support = f.support();
    if !is_quadric_support(&support) {
        return Err(Error::UnsupportedShape(format!(
            "{} variables: only quadric supports are handled above two variables",
            f.nvars()
        )));
    }
    let n = f.nvars() + 1;
    if (0..n).any(|i| !f.coefficient(&quadric_exponent(f.nvars(), i, i)).is_finite()) {
        return Err(Error::UnsupportedShape(
            "quadric in three or more variables needs every vertex of 2Δ_n in its support".into(),
        ));
    }
    Ok(())
}

/// Convex hull of the support together with its lattice points.
pub fn newton_polytope(f: &TropPolynomial) -> Result<NewtonPolytope> {
    if f.nvars() == 0 {
        return Err(Error::UnsupportedShape("polynomial in zero variables".into()));
    }
    if f.nvars() <= 2 {
        return Ok(planar_polytope(&f.support(), f.nvars()));
    }
    require_full_quadric(f)?;
    Ok(quadric_polytope(f.nvars()))
}

/// Regular subdivision induced by the lower hull of `(ω, sign·a_ω)`.
pub fn induced_subdivision(f: &TropPolynomial, sign: Sign) -> Result<Subdivision> {
    let polytope = newton_polytope(f)?;
    if f.nvars() > 2 {
        return Ok(quadric_subdivision(f, sign, polytope));
    }
    let lifted = LiftedPoints::new(f, sign);
    let pts: Vec<(P2, Rational)> = lifted.points.iter().map(|(e, h)| (to_p2(e), *h)).collect();
    let nvars = f.nvars();
    let (cells, edges) = match polytope.dim {
        0 => (
            vec![Cell {
                corners: vec![from_p2(pts[0].0, nvars)],
                points: vec![from_p2(pts[0].0, nvars)],
                slope: vec![],
            }],
            Vec::new(),
        ),
        1 => (segment_cells(&pts, nvars), Vec::new()),
        _ => {
            let cells = facet_cells(&pts, nvars);
            let edges = cell_edges(&cells);
            (cells, edges)
        }
    };
    let appearing_nodes = cells.iter().flat_map(|c| c.corners.iter().cloned()).collect();
    Ok(Subdivision { sign, polytope, cells: Some(cells), edges, appearing_nodes })
}

/// Lower hull of a collinear support, parametrized along its primitive
/// direction.
fn segment_cells(pts: &[(P2, Rational)], nvars: usize) -> Vec<Cell> {
    let origin = pts.iter().map(|(p, _)| *p).min().unwrap();
    let far = pts.iter().map(|(p, _)| *p).max().unwrap();
    let dir = primitive(sub(far, origin));
    let param = |p: P2| -> i64 {
        let d = sub(p, origin);
        if dir[0] != 0 {
            d[0] / dir[0]
        } else {
            d[1] / dir[1]
        }
    };
    let mut line: Vec<(i64, Rational, P2)> = pts.iter().map(|&(p, h)| (param(p), h, p)).collect();
    line.sort();
    // lower hull in the (t, h) plane, strict turns only
    let turn = |a: &(i64, Rational, P2), b: &(i64, Rational, P2), c: &(i64, Rational, P2)| -> Rational {
        (c.1 - a.1) * (b.0 - a.0) - (b.1 - a.1) * (c.0 - a.0)
    };
    let mut hull: Vec<(i64, Rational, P2)> = Vec::new();
    for q in line {
        while hull.len() >= 2 && !turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &q).is_positive() {
            hull.pop();
        }
        hull.push(q);
    }
    hull.windows(2)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            let slope = (b.1 - a.1) / Rational::from_integer(b.0 - a.0);
            let on: Vec<Exponent> = pts
                .iter()
                .filter(|&&(p, h)| {
                    let t = param(p);
                    t >= a.0 && t <= b.0 && h == a.1 + slope * (t - a.0)
                })
                .map(|&(p, _)| from_p2(p, nvars))
                .collect();
            Cell { corners: vec![from_p2(a.2, nvars), from_p2(b.2, nvars)], points: on, slope: vec![slope] }
        })
        .collect()
}

/// Lower facets of a full-dimensional planar lifted configuration.
///
/// Every lower facet contains three affinely independent lifted points, so
/// it is found by testing the planes through all such triples.
fn facet_cells(pts: &[(P2, Rational)], nvars: usize) -> Vec<Cell> {
    let m = pts.len();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut cells = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let (p, q, r) = (pts[i].0, pts[j].0, pts[k].0);
                let det = cross(p, q, r);
                if det == 0 {
                    continue;
                }
                // slope (sx, sy) with h = sx*x + sy*y + c through the three lifts
                let (u, v) = (sub(q, p), sub(r, p));
                let (dh1, dh2) = (pts[j].1 - pts[i].1, pts[k].1 - pts[i].1);
                let det_r = Rational::from_integer(det);
                let sx = (dh1 * v[1] - dh2 * u[1]) / det_r;
                let sy = (dh2 * u[0] - dh1 * v[0]) / det_r;
                let plane = |s: P2| pts[i].1 + sx * (s[0] - p[0]) + sy * (s[1] - p[1]);
                let mut on = Vec::new();
                let mut lower = true;
                for (idx, &(s, h)) in pts.iter().enumerate() {
                    let z = plane(s);
                    if h < z {
                        lower = false;
                        break;
                    }
                    if h == z {
                        on.push(idx);
                    }
                }
                if !lower || !seen.insert(on.clone()) {
                    continue;
                }
                let face: Vec<P2> = on.iter().map(|&t| pts[t].0).collect();
                let mut face_sorted: Vec<Exponent> = face.iter().map(|&s| from_p2(s, nvars)).collect();
                face_sorted.sort();
                cells.push(Cell {
                    corners: convex_hull(&face).into_iter().map(|s| from_p2(s, nvars)).collect(),
                    points: face_sorted,
                    slope: vec![sx, sy],
                });
            }
        }
    }
    cells.sort_by(|a, b| a.corners.cmp(&b.corners));
    cells
}

fn cell_edges(cells: &[Cell]) -> Vec<SubdivisionEdge> {
    let mut map: BTreeMap<[Exponent; 2], Vec<usize>> = BTreeMap::new();
    let mut oriented: BTreeMap<[Exponent; 2], [Exponent; 2]> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        let k = cell.corners.len();
        for t in 0..k {
            let a = cell.corners[t].clone();
            let b = cell.corners[(t + 1) % k].clone();
            let key = if a < b { [a.clone(), b.clone()] } else { [b.clone(), a.clone()] };
            map.entry(key.clone()).or_default().push(ci);
            oriented.entry(key).or_insert([a, b]);
        }
    }
    map.into_iter()
        .map(|(key, cells)| {
            let endpoints = if cells.len() == 1 { oriented[&key].clone() } else { key };
            SubdivisionEdge { endpoints, cells }
        })
        .collect()
}

fn quadric_subdivision(f: &TropPolynomial, sign: Sign, polytope: NewtonPolytope) -> Subdivision {
    let nvars = f.nvars();
    let n = nvars + 1;
    let height = |i: usize, j: usize| f.coefficient(&quadric_exponent(nvars, i, j)).finite().map(|a| sign.apply(a));
    let mut appearing: BTreeSet<Exponent> = polytope.vertices.iter().cloned().collect();
    for i in 0..n {
        for j in i + 1..n {
            let (hi, hj) = (height(i, i).expect("diagonal checked"), height(j, j).expect("diagonal checked"));
            if let Some(hij) = height(i, j) {
                if hij < (hi + hj) * rat(1, 2) {
                    appearing.insert(quadric_exponent(nvars, i, j));
                }
            }
        }
    }
    Subdivision { sign, polytope, cells: None, edges: Vec::new(), appearing_nodes: appearing }
}

/// Maximal / minimal in nodes, counting only 0-cells as appearing.
pub fn node_classification(s: &Subdivision) -> NodeClass {
    let all: BTreeSet<&Exponent> = s.polytope.lattice_nodes.iter().collect();
    let appearing: BTreeSet<&Exponent> = s.appearing_nodes.iter().collect();
    let corners: BTreeSet<&Exponent> = s.polytope.vertices.iter().collect();
    if appearing == all {
        NodeClass::MaximalInNodes
    } else if appearing == corners {
        NodeClass::MinimalInNodes
    } else {
        NodeClass::Neither
    }
}

/// True iff no cell admits a refinement: every cell is a primitive lattice
/// simplex (a unimodular triangle, or a segment of lattice length one).
pub fn is_complete(s: &Subdivision) -> Result<bool> {
    if s.polytope.nvars != 2 {
        return Err(Error::UnsupportedShape(format!(
            "completeness is defined for planar subdivisions, got {} variables",
            s.polytope.nvars
        )));
    }
    let cells = s.cells.as_ref().expect("planar subdivisions carry cells");
    Ok(cells.iter().all(|c| match c.corners.len() {
        1 => true,
        2 => {
            let d = sub(to_p2(&c.corners[1]), to_p2(&c.corners[0]));
            d[0].gcd(&d[1]) == 1
        }
        3 => cross(to_p2(&c.corners[0]), to_p2(&c.corners[1]), to_p2(&c.corners[2])).abs() == 1,
        _ => false,
    }))
}

/// Sign of the distortion of the midpoint node between two exponents:
/// `h(mid) - (h(a) + h(b)) / 2`.
pub fn midpoint_distortion(lifted: &LiftedPoints, a: &[i64], b: &[i64]) -> Option<Rational> {
    let mid: Exponent = a.iter().zip(b).map(|(x, y)| (x + y) / 2).collect();
    let (ha, hb, hm) = (lifted.height(a)?, lifted.height(b)?, lifted.height(&mid)?);
    let d = hm - (ha + hb) * rat(1, 2);
    Some(if d.is_zero() { Rational::zero() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::TropValue;

    pub(crate) fn conic(a: [i64; 6]) -> TropPolynomial {
        let e: [&[i64]; 6] = [&[2, 0], &[0, 2], &[0, 0], &[1, 1], &[1, 0], &[0, 1]];
        TropPolynomial::new(2, e.iter().zip(a).map(|(e, c)| (e.to_vec(), TropValue::int(c)))).unwrap()
    }

    fn planar(terms: &[([i64; 2], i64)]) -> TropPolynomial {
        TropPolynomial::new(2, terms.iter().map(|(e, c)| (e.to_vec(), TropValue::int(*c)))).unwrap()
    }

    #[test]
    fn polytope_examples() {
        let p = newton_polytope(&conic([0; 6])).unwrap();
        assert_eq!(p.vertices, vec![vec![0, 0], vec![2, 0], vec![0, 2]]);
        assert_eq!(p.lattice_nodes.len(), 6);

        let single = newton_polytope(&planar(&[([1, 1], 4)])).unwrap();
        assert_eq!((single.dim, single.lattice_nodes.len()), (0, 1));

        let seg = newton_polytope(&planar(&[([1, 2], 0), ([0, 0], 0)])).unwrap();
        assert_eq!(seg.dim, 1);
        assert_eq!(seg.lattice_nodes, vec![vec![0, 0], vec![1, 2]]);
    }

    #[test]
    fn full_example_is_maximal() {
        let s = induced_subdivision(&conic([1, 2, 3, -2, 1, -1]), Sign::Examples).unwrap();
        assert_eq!(s.appearing_nodes.len(), 6);
        assert_eq!(s.cells.as_ref().unwrap().len(), 4);
        assert_eq!(node_classification(&s), NodeClass::MaximalInNodes);
        assert!(is_complete(&s).unwrap());
    }

    #[test]
    fn empty_example_is_minimal() {
        let s = induced_subdivision(&conic([1, 2, 5, 3, 4, 4]), Sign::Examples).unwrap();
        assert_eq!(s.appearing_nodes.len(), 3);
        assert_eq!(s.cells.as_ref().unwrap().len(), 1);
        assert_eq!(node_classification(&s), NodeClass::MinimalInNodes);
        assert!(!is_complete(&s).unwrap());
    }

    #[test]
    fn mixed_signs_are_neither() {
        // a4 below its chord (eps4 < 0); a5, a6 above (eps5, eps6 > 0)
        let s = induced_subdivision(&conic([0, 0, 0, -1, 1, 1]), Sign::Examples).unwrap();
        assert_eq!(node_classification(&s), NodeClass::Neither);
        assert!(s.appearing_nodes.contains(&vec![1, 1]));
        assert!(!s.appearing_nodes.contains(&vec![1, 0]));
    }

    #[test]
    fn constant_lifting_gives_one_cell() {
        let s = induced_subdivision(&conic([7; 6]), Sign::Examples).unwrap();
        let cells = s.cells.as_ref().unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].points.len(), 6);
        assert_eq!(s.appearing_nodes.len(), 3);
    }

    #[test]
    fn zero_distortion_node_is_not_a_zero_cell() {
        // eps4 = 0 exactly, eps5/eps6 < 0
        let s = induced_subdivision(&conic([2, 2, 2, 2, 0, 0]), Sign::Examples).unwrap();
        assert!(!s.appearing_nodes.contains(&vec![1, 1]));
        assert!(s.appearing_nodes.contains(&vec![1, 0]));
    }

    #[test]
    fn kapranov_sign_flips_the_hull() {
        let f = conic([1, 2, 5, 3, 4, 4]);
        let s = induced_subdivision(&f, Sign::Kapranov).unwrap();
        assert_eq!(node_classification(&s), NodeClass::MaximalInNodes);
    }

    #[test]
    fn refinable_maximal_subdivision_is_not_complete() {
        // every node appears but the cell (0,2),(0,1),(1,0),(1,1) is a
        // parallelogram, which can still be cut along a diagonal
        let f = planar(&[([0, 0], 0), ([1, 0], 0), ([2, 0], 2), ([0, 1], 1), ([1, 1], 2), ([0, 2], 3)]);
        let s = induced_subdivision(&f, Sign::Examples).unwrap();
        assert_eq!(node_classification(&s), NodeClass::MaximalInNodes);
        let cells = s.cells.as_ref().unwrap();
        assert_eq!(cells.len(), 3);
        assert!(cells.iter().any(|c| c.corners.len() == 4));
        assert!(!is_complete(&s).unwrap());
    }

    #[test]
    fn univariate_segments() {
        let f = TropPolynomial::new(
            1,
            vec![(vec![0], TropValue::int(0)), (vec![1], TropValue::int(-1)), (vec![3], TropValue::int(0))],
        )
        .unwrap();
        let s = induced_subdivision(&f, Sign::Examples).unwrap();
        assert_eq!(s.cells.as_ref().unwrap().len(), 2);
        assert_eq!(s.appearing_nodes.len(), 3);
        assert_eq!(node_classification(&s), NodeClass::Neither);
        assert!(is_complete(&s).is_err());
    }

    #[test]
    fn quadric_exponent_roundtrip() {
        for nvars in 1..5 {
            for i in 0..=nvars {
                for j in i..=nvars {
                    assert_eq!(quadric_cell(&quadric_exponent(nvars, i, j)), Some((i, j)));
                }
            }
        }
        assert_eq!(quadric_cell(&[3, 0]), None);
    }

    #[test]
    fn higher_dimensional_quadric_uses_edge_triples() {
        // x1^2, x2^2, x3^2, 1 at height 0; x1x2 below its chord, x1 above
        let nvars = 3;
        let mut terms: Vec<(Exponent, TropValue)> =
            (0..4).map(|i| (quadric_exponent(nvars, i, i), TropValue::int(0))).collect();
        terms.push((quadric_exponent(nvars, 0, 1), TropValue::int(-1)));
        terms.push((quadric_exponent(nvars, 0, 3), TropValue::int(1)));
        let f = TropPolynomial::new(nvars, terms).unwrap();
        let s = induced_subdivision(&f, Sign::Examples).unwrap();
        assert!(s.cells.is_none());
        assert_eq!(s.polytope.lattice_nodes.len(), 10);
        assert_eq!(s.appearing_nodes.len(), 5);
        assert!(s.appearing_nodes.contains(&vec![1, 1, 0]));
        assert_eq!(node_classification(&s), NodeClass::Neither);
    }

    #[test]
    fn non_quadric_high_dimension_rejected() {
        let f = TropPolynomial::new(3, vec![(vec![3, 0, 0], TropValue::int(0))]).unwrap();
        assert!(matches!(induced_subdivision(&f, Sign::Examples), Err(Error::UnsupportedShape(_))));
    }
}
