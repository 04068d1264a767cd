//! Classical projective duality of plane curves via resultants.

use crate::error::{Error, Result};
use crate::symbolic::{SymbolicMatrix, SymbolicPoly};

/// Sylvester determinant for coefficient lists given lowest degree first.
/// The formal degrees are the list lengths minus one.
fn sylvester(p: &[SymbolicPoly], q: &[SymbolicPoly], vars: &[&str]) -> SymbolicPoly {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    if size == 0 {
        return SymbolicPoly::int(vars, 1);
    }
    let zero = SymbolicPoly::zero(vars);
    let mut rows = vec![vec![zero; size]; size];
    for r in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            rows[n + r][r + k] = c.clone();
        }
    }
    SymbolicMatrix::new(rows).expect("square by construction").det()
}

/// `Res_var(p, q)`: the determinant of the Sylvester matrix built from the
/// coefficients of `p` and `q` in `var`.
pub fn sylvester_resultant(p: &SymbolicPoly, q: &SymbolicPoly, var: &str) -> Result<SymbolicPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (pa, qa) = (p + &SymbolicPoly::zero(&[var]), q + &SymbolicPoly::zero(&[var]));
    let vars: Vec<String> = (&pa + &qa).vars().to_vec();
    let (pa, qa) = (pa.with_vars(&vars), qa.with_vars(&vars));
    let vr: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ok(sylvester(&pa.coefficients_in(var), &qa.coefficients_in(var), &vr))
}

/// Resultant of two binary forms in `(u, v)` of formal degrees `m` and `n`,
/// computed on the chart `v = 1`.
fn binary_form_resultant(p: &SymbolicPoly, q: &SymbolicPoly, u: &str, v: &str, m: u32, n: u32) -> SymbolicPoly {
    let vars: Vec<String> = (p + q).vars().to_vec();
    let vr: Vec<&str> = vars.iter().map(String::as_str).collect();
    let one = SymbolicPoly::int(&vr, 1);
    let coeffs = |f: &SymbolicPoly, deg: u32| {
        let mut c = f.with_vars(&vars).substitute(v, &one).coefficients_in(u);
        c.resize(deg as usize + 1, SymbolicPoly::zero(&vr));
        c
    };
    sylvester(&coeffs(p, m), &coeffs(q, n), &vr)
}

pub const PROJECTIVE_VARS: [&str; 3] = ["t0", "t1", "t2"];
pub const LINE_VARS: [&str; 3] = ["alpha0", "alpha1", "alpha2"];
pub const AFFINE_VARS: [&str; 2] = ["a0", "a1"];

/// The dual of a plane curve, before and after passing to the affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCurve {
    /// In the line coordinates `alpha0, alpha1, alpha2`, with monomial
    /// content in those variables and the rational content removed.
    pub projective: SymbolicPoly,
    /// After `(alpha0, alpha1, alpha2) ↦ (-a0, -a1, 1)`, sign-normalized.
    pub affine: SymbolicPoly,
}

/// Dual of the plane curve `F(t0, t1, t2) = 0` for a form of degree 2 or 3.
///
/// The tangency condition for the line `alpha0 t0 + alpha1 t1 + alpha2 t2`
/// is obtained by restricting `F` along `t0 ↦ -(alpha1 u + alpha2 v)`,
/// `t1 ↦ alpha0 u`, `t2 ↦ alpha0 v` and taking the resultant of the two
/// partials in `u` and `v`. Coefficient indeterminates of `F` are carried
/// through unchanged.
pub fn dual_plane_curve(f: &SymbolicPoly) -> Result<DualCurve> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for v in f.vars() {
        if LINE_VARS.contains(&v.as_str()) || v == "u" || v == "v" || AFFINE_VARS.contains(&v.as_str()) {
            return Err(Error::Precondition(format!("reserved variable name {v}")));
        }
    }
    let base = f + &SymbolicPoly::zero(&PROJECTIVE_VARS);
    let d = base
        .homogeneous_degree(&PROJECTIVE_VARS)
        .ok_or_else(|| Error::Precondition("curve must be a form in t0, t1, t2".into()))?;
    if !(2..=3).contains(&d) {
        return Err(Error::UnsupportedShape(format!("dual curves of degree {d} are not supported")));
    }

    let mut vars: Vec<String> = base.vars().to_vec();
    vars.extend(LINE_VARS.iter().chain(["u", "v"].iter()).map(|s| s.to_string()));
    let vr: Vec<&str> = vars.iter().map(String::as_str).collect();
    let var = |name: &str| SymbolicPoly::var(&vr, name);
    let (u, v) = (var("u"), var("v"));
    let [a0, a1, a2] = LINE_VARS.map(var);

    let t0 = -&(&(&a1 * &u) + &(&a2 * &v));
    let t1 = &a0 * &u;
    let t2 = &a0 * &v;
    let restricted = base.with_vars(&vars).substitute("t0", &t0).substitute("t1", &t1).substitute("t2", &t2);

    let du = restricted.derivative("u");
    let dv = restricted.derivative("v");
    let res = binary_form_resultant(&du, &dv, "u", "v", d - 1, d - 1);
    if res.is_zero() {
        return Err(Error::Degenerate("tangency resultant vanishes identically".into()));
    }
    let projective = res.strip_monomial_content(&LINE_VARS).primitive_part().compact();

    let pv: Vec<String> = projective.vars().to_vec();
    let mut all = pv.clone();
    all.extend(AFFINE_VARS.iter().map(|s| s.to_string()));
    let ar: Vec<&str> = all.iter().map(String::as_str).collect();
    let affine = projective
        .with_vars(&all)
        .substitute("alpha0", &-&SymbolicPoly::var(&ar, "a0"))
        .substitute("alpha1", &-&SymbolicPoly::var(&ar, "a1"))
        .substitute("alpha2", &SymbolicPoly::int(&ar, 1))
        .primitive_part()
        .compact();
    Ok(DualCurve { projective, affine })
}

/// Homogenized generic conic `z̄ C z̄ᵀ` with `z̄ = (t1, t2, t0)` and `C` the
/// generic symmetric matrix in `c1..c6`.
pub fn generic_conic_form() -> SymbolicPoly {
    quadratic_form(&SymbolicMatrix::generic_symmetric(3), &["t1", "t2", "t0"])
}

/// `Σ_ij M_ij x_i x_j` for the named coordinates.
pub fn quadratic_form(m: &SymbolicMatrix, coords: &[&str]) -> SymbolicPoly {
    let mut vars: Vec<String> = m.get(0, 0).vars().to_vec();
    vars.extend(coords.iter().map(|s| s.to_string()));
    let vr: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut acc = SymbolicPoly::zero(&vr);
    for (i, xi) in coords.iter().enumerate() {
        for (j, xj) in coords.iter().enumerate() {
            let mono = &SymbolicPoly::var(&vr, xi) * &SymbolicPoly::var(&vr, xj);
            acc = &acc + &(m.get(i, j) * &mono);
        }
    }
    acc
}
