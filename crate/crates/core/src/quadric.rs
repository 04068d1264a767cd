//! Tropical quadrics in matrix form, their duals, distortion matrices and
//! regularity under double duality.
//!
//! A quadric in `n` variables is `F(x̄) = x̄ A x̄ᵀ` with `x̄ = (x_1, ..., x_n, 1)`
//! and `A` a symmetric `(n+1)×(n+1)` max-plus matrix. Its dual is given by
//! the tropical adjoint of `A`.
//!
//! Writing `a_ij = ½a_ii ⊙ ½a_jj ⊙ ε_ij` splits every entry into a diagonal
//! part and a distortion `ε_ij`. The sign of `ε_ij` decides whether the
//! node `x_i x_j` is a 0-cell of the induced subdivision, and the minors
//! of `A` factor as `|A_ij| = G_ij(A) ⊙ |E_ij|`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{minor_det, trop_adjoint, trop_det, TropMatrix};
use crate::polynomial::{Exponent, TropPolynomial};
use crate::semiring::{rat, t_add, t_mul, t_scale, t_sum, Rational, TropValue};
use crate::subdivision::{quadric_cell, quadric_exponent};

/// Symmetric matrix of a tropical quadric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricMatrix(TropMatrix);

impl QuadricMatrix {
    pub fn new(m: TropMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            // re-validate: callers may hand in an unmarked but symmetric matrix
            let m = TropMatrix::from_rows(m.rows(), true)?;
            return Ok(QuadricMatrix(m));
        }
        Ok(QuadricMatrix(m))
    }

    pub fn from_upper(size: usize, upper: &[TropValue]) -> Result<Self> {
        Ok(QuadricMatrix(TropMatrix::symmetric_from_upper(size, upper)?))
    }

    /// Conic from `(a1, ..., a6)`: diagonal `a1, a2, a3`, then `(1,2)`, `(1,3)`, `(2,3)`.
    pub fn conic(a: [TropValue; 6]) -> Self {
        QuadricMatrix(TropMatrix::conic(a))
    }

    pub fn conic_int(a: [i64; 6]) -> Self {
        Self::conic(a.map(TropValue::int))
    }

    pub fn matrix(&self) -> &TropMatrix {
        &self.0
    }

    /// Side length `n + 1`.
    pub fn size(&self) -> usize {
        self.0.n()
    }

    /// Number of affine variables `n`.
    pub fn nvars(&self) -> usize {
        self.0.n() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> TropValue {
        self.0.get(i, j)
    }

    fn diag(&self, i: usize) -> Result<Rational> {
        self.get(i, i).finite().ok_or(Error::InfiniteDiagonal(i + 1))
    }

    fn check_finite_diagonal(&self) -> Result<()> {
        (0..self.size()).try_for_each(|i| self.diag(i).map(|_| ()))
    }

    /// `(a_11, ..., a_NN, a_12, a_13, ..., a_(N-1)N)`.
    pub fn coefficients(&self) -> Vec<TropValue> {
        self.0.diag_then_upper()
    }
}

impl fmt::Display for QuadricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_index(size: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    if i == 0 || j == 0 || i > size || j > size {
        return Err(Error::IndexOutOfRange { row: i, col: j, n: size });
    }
    Ok((i - 1, j - 1))
}

/// Reads the symmetric matrix off a quadric polynomial.
pub fn matrix_from_poly(f: &TropPolynomial) -> Result<QuadricMatrix> {
    let nvars = f.nvars();
    let size = nvars + 1;
    let mut rows = vec![vec![TropValue::NegInf; size]; size];
    for (exp, &coef) in f.terms() {
        let (i, j) = quadric_cell(exp)
            .ok_or_else(|| Error::UnsupportedShape(format!("monomial {exp:?} is not of degree <= 2")))?;
        rows[i][j] = coef;
        rows[j][i] = coef;
    }
    QuadricMatrix::new(TropMatrix::from_rows(rows, true)?)
}

/// The quadric polynomial of a matrix; each cross term appears once.
pub fn poly_from_matrix(a: &QuadricMatrix) -> Result<TropPolynomial> {
    let nvars = a.nvars();
    let size = a.size();
    let terms: Vec<(Exponent, TropValue)> = (0..size)
        .flat_map(|i| (i..size).map(move |j| (i, j)))
        .map(|(i, j)| (quadric_exponent(nvars, i, j), a.get(i, j)))
        .collect();
    TropPolynomial::new(nvars, terms)
}

/// Dual quadric: the tropical adjoint of `A`.
pub fn dual_quadric(a: &QuadricMatrix) -> Result<QuadricMatrix> {
    Ok(QuadricMatrix(trop_adjoint(&a.0)?))
}

/// Distortions `ε_ij = a_ij - ½(a_ii + a_jj)`, with `ε_ii = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistortionMatrix(TropMatrix);

impl DistortionMatrix {
    /// Wraps a symmetric matrix with zero diagonal.
    pub fn new(m: TropMatrix) -> Result<Self> {
        let m = if m.is_symmetric() { m } else { TropMatrix::from_rows(m.rows(), true)? };
        if let Some(i) = (0..m.n()).find(|&i| m.get(i, i) != TropValue::ONE) {
            return Err(Error::Precondition(format!("distortion diagonal entry ({0},{0}) must be 0", i + 1)));
        }
        Ok(DistortionMatrix(m))
    }

    /// Builds from the strict upper triangle, row-major.
    pub fn from_off_diagonal(size: usize, off: &[TropValue]) -> Result<Self> {
        let mut it = off.iter();
        let mut upper = Vec::with_capacity(size * (size + 1) / 2);
        for i in 0..size {
            for j in i..size {
                if i == j {
                    upper.push(TropValue::ONE);
                } else {
                    upper.push(*it.next().ok_or_else(|| Error::Parse("too few distortions".into()))?);
                }
            }
        }
        if it.next().is_some() {
            return Err(Error::Parse("too many distortions".into()));
        }
        Self::new(TropMatrix::symmetric_from_upper(size, &upper)?)
    }

    pub fn matrix(&self) -> &TropMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize) -> TropValue {
        self.0.get(i, j)
    }

    /// Off-diagonal entries, upper triangle row-major.
    pub fn off_diagonal(&self) -> Vec<TropValue> {
        let n = self.size();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect()
    }

    fn all_negative(&self) -> bool {
        self.off_diagonal().iter().all(|v| v.is_finite() && v.is_negative())
    }
}

pub fn distortion_matrix(a: &QuadricMatrix) -> Result<DistortionMatrix> {
    a.check_finite_diagonal()?;
    let half = rat(1, 2);
    let m = TropMatrix::from_fn(a.size(), true, |i, j| {
        if i == j {
            return TropValue::ONE;
        }
        match a.get(i, j) {
            TropValue::NegInf => TropValue::NegInf,
            TropValue::Finite(v) => TropValue::Finite(v - half * (a.diag(i).unwrap() + a.diag(j).unwrap())),
        }
    })?;
    Ok(DistortionMatrix(m))
}

/// `G_ij(A) = g_ij ⊙ ⊙_{l≠i,j} a_ll` with `g_ii = 0` and
/// `g_ij = ½a_ii ⊙ ½a_jj` otherwise. Indices are 1-based.
pub fn g_factor(a: &QuadricMatrix, i: usize, j: usize) -> Result<TropValue> {
    a.check_finite_diagonal()?;
    let (i, j) = check_index(a.size(), i, j)?;
    let half = rat(1, 2);
    let g = if i == j { Rational::from_integer(0) } else { half * (a.diag(i)? + a.diag(j)?) };
    let rest: Rational = (0..a.size()).filter(|&l| l != i && l != j).map(|l| a.diag(l).unwrap()).sum();
    Ok(TropValue::Finite(g + rest))
}

/// `(G_ij(A), |E_ij|)`; their `⊙`-product is `|A_ij|`. Indices are 1-based.
pub fn decompose_minor(a: &QuadricMatrix, i: usize, j: usize) -> Result<(TropValue, TropValue)> {
    let g = g_factor(a, i, j)?;
    let e = distortion_matrix(a)?;
    if a.size() < 2 {
        return Err(Error::MinorOfScalar);
    }
    Ok((g, minor_det(&e.0, i - 1, j - 1).value))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistortionClass {
    AllNegative,
    AllPositive,
    Mixed,
}

impl DistortionClass {
    pub fn as_str(self) -> &'static str {
        match self {
            DistortionClass::AllNegative => "all_negative",
            DistortionClass::AllPositive => "all_positive",
            DistortionClass::Mixed => "mixed",
        }
    }
}

/// Sign pattern of the off-diagonal distortions. `-inf` counts as negative;
/// zeros make the pattern mixed.
pub fn classify_by_distortion(e: &DistortionMatrix) -> DistortionClass {
    let off = e.off_diagonal();
    if off.iter().all(TropValue::is_negative) {
        DistortionClass::AllNegative
    } else if off.iter().all(TropValue::is_positive) {
        DistortionClass::AllPositive
    } else {
        DistortionClass::Mixed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityStatus {
    Regular,
    NotRegular,
    Degenerate,
}

impl RegularityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RegularityStatus::Regular => "regular",
            RegularityStatus::NotRegular => "not_regular",
            RegularityStatus::Degenerate => "degenerate",
        }
    }
}

/// 1-based matrix positions explaining a negative verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityWitness {
    /// `a** - a` at `offending` differs from its value at `reference`.
    Differs { reference: (usize, usize), offending: (usize, usize) },
    /// Exactly one of `a` and `a**` is `-inf` at this position.
    InfinityMismatch { at: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub status: RegularityStatus,
    pub lifting_constant: Option<Rational>,
    pub witness: Option<RegularityWitness>,
    pub double_dual: QuadricMatrix,
}

/// Double-dual test: regular iff `a**_ij - a_ij` is one constant over all
/// finite entries and the `-inf` patterns of `A` and `A**` agree.
pub fn is_regular(a: &QuadricMatrix) -> Result<RegularityVerdict> {
    let dd = dual_quadric(&dual_quadric(a)?)?;
    let n = a.size();
    let mut reference: Option<((usize, usize), Rational)> = None;
    let verdict = |status, lifting_constant, witness| RegularityVerdict {
        status,
        lifting_constant,
        witness,
        double_dual: dd.clone(),
    };
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.get(i, j), dd.get(i, j));
            match (x, y) {
                (TropValue::NegInf, TropValue::NegInf) => {}
                (TropValue::Finite(x), TropValue::Finite(y)) => match reference {
                    None => reference = Some(((i + 1, j + 1), y - x)),
                    Some((pos, lambda)) if lambda != y - x => {
                        return Ok(verdict(
                            RegularityStatus::NotRegular,
                            None,
                            Some(RegularityWitness::Differs { reference: pos, offending: (i + 1, j + 1) }),
                        ));
                    }
                    Some(_) => {}
                },
                _ => {
                    return Ok(verdict(
                        RegularityStatus::Degenerate,
                        None,
                        Some(RegularityWitness::InfinityMismatch { at: (i + 1, j + 1) }),
                    ));
                }
            }
        }
    }
    Ok(match reference {
        Some((_, lambda)) => verdict(RegularityStatus::Regular, Some(lambda), None),
        None => verdict(RegularityStatus::Degenerate, None, None),
    })
}

fn require_all_negative(e: &DistortionMatrix) -> Result<()> {
    if e.all_negative() {
        Ok(())
    } else {
        Err(Error::Precondition("every off-diagonal distortion must be finite and negative".into()))
    }
}

/// `(⊕_{k≠i,j} ε_jk) ⊙ (⊕_{h≠i,j} ε_hi)` for 0-based `i ≠ j`; `-inf` when
/// no third index exists.
fn split_path_term(e: &DistortionMatrix, i: usize, j: usize) -> TropValue {
    let others = || (0..e.size()).filter(move |&k| k != i && k != j);
    t_mul(t_sum(others().map(|k| e.get(j, k))), t_sum(others().map(|h| e.get(h, i))))
}

/// Strict inequality `ε_ji > (⊕_{k≠i,j} ε_jk) ⊙ (⊕_{h≠i,j} ε_hi)` for every
/// ordered pair `i ≠ j`. Requires all off-diagonal distortions negative.
pub fn negative_regularity_criterion(e: &DistortionMatrix) -> Result<bool> {
    require_all_negative(e)?;
    let n = e.size();
    Ok((0..n).all(|i| (0..n).filter(|&j| j != i).all(|j| e.get(j, i) > split_path_term(e, i, j))))
}

/// Closed form `|E_ij| = ε_ji ⊕ ((⊕_{k≠i,j} ε_jk) ⊙ (⊕_{h≠i,j} ε_hi))` for
/// all-negative distortions, and `|E_ii| = 0`. Indices are 1-based.
///
/// Matches the enumerated minor for 3×3 matrices. From 4×4 on, the right
/// factor pairs `k` with an unrelated `h` and can exceed the minor; see
/// [`minor_by_paths`] for the exact value.
pub fn minor_formula_negative(e: &DistortionMatrix, i: usize, j: usize) -> Result<TropValue> {
    require_all_negative(e)?;
    let (i, j) = check_index(e.size(), i, j)?;
    if i == j {
        return Ok(TropValue::ONE);
    }
    Ok(t_add(e.get(j, i), split_path_term(e, i, j)))
}

/// Max-plus closure `ε⁺`: best weight of a path `a → b` through any
/// intermediate indices, diagonal 0.
fn path_closure(e: &DistortionMatrix) -> Vec<Vec<TropValue>> {
    let n = e.size();
    let mut d: Vec<Vec<TropValue>> = (0..n).map(|i| (0..n).map(|j| e.get(i, j)).collect()).collect();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                let via = t_mul(d[a][k], d[k][b]);
                d[a][b] = t_add(d[a][b], via);
            }
        }
    }
    d
}

/// Exact minor `|E_ij|` of an all-negative distortion matrix as the
/// heaviest path `j → i`: deleting row `i` and column `j` leaves one open
/// chain from `j` to `i`, and every other index is best left on the zero
/// diagonal. Indices are 1-based.
pub fn minor_by_paths(e: &DistortionMatrix, i: usize, j: usize) -> Result<TropValue> {
    require_all_negative(e)?;
    let (i, j) = check_index(e.size(), i, j)?;
    Ok(path_closure(e)[j][i])
}

/// Regularity test for all-negative distortions: `A` is regular iff
/// `ε_ij ≥ ε_ik + ε_kj` for all distinct `i, j, k`, i.e. iff the distortion
/// matrix is already closed under heaviest paths.
pub fn path_regularity_criterion(e: &DistortionMatrix) -> Result<bool> {
    require_all_negative(e)?;
    let closure = path_closure(e);
    let n = e.size();
    Ok((0..n).all(|a| (0..n).all(|b| closure[a][b] == e.get(a, b))))
}

/// Tropical determinant of the quadric matrix.
pub fn quadric_det(a: &QuadricMatrix) -> Result<crate::matrix::TropDetResult> {
    trop_det(&a.0)
}

/// Half of a tropical value, used by the distortion split.
pub fn half(v: TropValue) -> TropValue {
    t_scale(rat(1, 2), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::trop_minor;
    use crate::semiring::NEG_INF;

    fn v(n: i64) -> TropValue {
        TropValue::int(n)
    }

    fn full() -> QuadricMatrix {
        QuadricMatrix::conic_int([1, 2, 3, -2, 1, -1])
    }

    fn empty() -> QuadricMatrix {
        QuadricMatrix::conic_int([1, 2, 5, 3, 4, 4])
    }

    fn conic_poly(a: [i64; 6]) -> TropPolynomial {
        let e: [&[i64]; 6] = [&[2, 0], &[0, 2], &[0, 0], &[1, 1], &[1, 0], &[0, 1]];
        TropPolynomial::new(2, e.iter().zip(a).map(|(e, c)| (e.to_vec(), v(c)))).unwrap()
    }

    #[test]
    fn matrix_poly_roundtrip() {
        let f = conic_poly([1, 2, 3, -2, 1, -1]);
        let a = matrix_from_poly(&f).unwrap();
        assert_eq!(a, full());
        assert_eq!(poly_from_matrix(&a).unwrap(), f);

        let diag = TropPolynomial::new(2, vec![(vec![2, 0], v(0)), (vec![0, 2], v(0)), (vec![0, 0], v(0))]).unwrap();
        let a = matrix_from_poly(&diag).unwrap();
        assert_eq!(a.coefficients(), vec![v(0), v(0), v(0), NEG_INF, NEG_INF, NEG_INF]);
        assert_eq!(poly_from_matrix(&a).unwrap(), diag);
    }

    #[test]
    fn matrix_from_non_quadric_fails() {
        let f = TropPolynomial::new(2, vec![(vec![1, 2], v(0)), (vec![0, 0], v(0))]).unwrap();
        assert!(matches!(matrix_from_poly(&f), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_quadric(&full()).unwrap().coefficients(), [5, 4, 3, 1, 3, 0].map(v).to_vec());
        assert_eq!(dual_quadric(&empty()).unwrap().coefficients(), [8, 8, 6, 8, 7, 7].map(v).to_vec());
    }

    #[test]
    fn distortion_examples() {
        let e = distortion_matrix(&full()).unwrap();
        let h = |n| TropValue::frac(n, 2);
        assert_eq!(e.off_diagonal(), vec![h(-7), v(-1), h(-7)]);
        assert_eq!(classify_by_distortion(&e), DistortionClass::AllNegative);

        let e = distortion_matrix(&empty()).unwrap();
        assert_eq!(e.off_diagonal(), vec![h(3), v(1), h(1)]);
        assert_eq!(classify_by_distortion(&e), DistortionClass::AllPositive);

        let e = distortion_matrix(&QuadricMatrix::conic_int([2, 4, 6, 3, 4, 5])).unwrap();
        assert_eq!(e.off_diagonal(), vec![v(0); 3]);

        let mixed = DistortionMatrix::from_off_diagonal(3, &[v(-1), v(1), v(1)]).unwrap();
        assert_eq!(classify_by_distortion(&mixed), DistortionClass::Mixed);
    }

    #[test]
    fn distortion_requires_finite_diagonal() {
        let a = QuadricMatrix::conic([NEG_INF, v(0), v(0), v(0), v(0), v(0)]);
        assert_eq!(distortion_matrix(&a), Err(Error::InfiniteDiagonal(1)));
    }

    #[test]
    fn g_factor_examples() {
        assert_eq!(g_factor(&full(), 1, 1).unwrap(), v(5));
        assert_eq!(g_factor(&full(), 2, 3).unwrap(), TropValue::frac(7, 2));
        let a = QuadricMatrix::from_upper(4, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10].map(v)).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let lhs = t_mul(g_factor(&a, i, i).unwrap(), g_factor(&a, j, j).unwrap());
                assert_eq!(lhs, t_scale(rat(2, 1), g_factor(&a, i, j).unwrap()));
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let (g, e) = decompose_minor(&full(), 3, 2).unwrap();
        assert_eq!(g, TropValue::frac(7, 2));
        assert_eq!(e, TropValue::frac(-7, 2));
        assert_eq!(t_mul(g, e), v(0));

        // zero distortion: |A_ij| = G_ij
        let a = QuadricMatrix::conic_int([2, 4, 6, 3, 4, 5]);
        for i in 1..=3 {
            for j in 1..=3 {
                let (g, e) = decompose_minor(&a, i, j).unwrap();
                assert_eq!(e, v(0));
                assert_eq!(g, trop_det(&trop_minor(a.matrix(), i, j).unwrap()).unwrap().value);
            }
        }
    }

    #[test]
    fn regularity_examples() {
        let r = is_regular(&full()).unwrap();
        assert_eq!(r.status, RegularityStatus::Regular);
        assert_eq!(r.lifting_constant, Some(rat(6, 1)));
        assert_eq!(r.double_dual.coefficients(), [7, 8, 9, 4, 7, 5].map(v).to_vec());

        let r = is_regular(&empty()).unwrap();
        assert_eq!(r.status, RegularityStatus::NotRegular);
        assert_eq!(r.witness, Some(RegularityWitness::Differs { reference: (1, 1), offending: (1, 2) }));
        assert_eq!(r.double_dual.coefficients(), [14, 14, 16, 14, 15, 15].map(v).to_vec());

        // diagonal conic is its own dual, so it is regular with lambda 0
        let diag = QuadricMatrix::conic([v(0), v(0), v(0), NEG_INF, NEG_INF, NEG_INF]);
        assert_eq!(dual_quadric(&diag).unwrap(), diag);
        let r = is_regular(&diag).unwrap();
        assert_eq!(r.status, RegularityStatus::Regular);
        assert_eq!(r.lifting_constant, Some(rat(0, 1)));
    }

    #[test]
    fn regularity_degenerate_on_infinity_mismatch() {
        // -inf diagonal turns finite after dualizing
        let a = QuadricMatrix::conic([NEG_INF, NEG_INF, NEG_INF, v(0), v(0), v(0)]);
        let r = is_regular(&a).unwrap();
        assert_eq!(r.status, RegularityStatus::Degenerate);
        assert_eq!(r.witness, Some(RegularityWitness::InfinityMismatch { at: (1, 1) }));

        // a block-diagonal pattern survives double duality
        let a = QuadricMatrix::conic([v(0), v(0), v(0), v(1), NEG_INF, NEG_INF]);
        let r = is_regular(&a).unwrap();
        assert_eq!(r.status, RegularityStatus::Regular);
        assert_eq!(r.lifting_constant, Some(rat(2, 1)));
    }

    #[test]
    fn criterion_examples() {
        let e = distortion_matrix(&full()).unwrap();
        assert!(negative_regularity_criterion(&e).unwrap());
        assert!(path_regularity_criterion(&e).unwrap());

        let e = DistortionMatrix::from_off_diagonal(3, &[v(-10), v(-1), v(-1)]).unwrap();
        assert!(!negative_regularity_criterion(&e).unwrap());
        let a = QuadricMatrix::conic([v(0), v(0), v(0), v(-10), v(-1), v(-1)]);
        assert_eq!(is_regular(&a).unwrap().status, RegularityStatus::NotRegular);

        let two = DistortionMatrix::from_off_diagonal(2, &[v(-3)]).unwrap();
        assert!(negative_regularity_criterion(&two).unwrap());

        let positive = distortion_matrix(&empty()).unwrap();
        assert!(matches!(negative_regularity_criterion(&positive), Err(Error::Precondition(_))));
    }

    #[test]
    fn minor_formula_examples() {
        let e = distortion_matrix(&full()).unwrap();
        assert_eq!(minor_formula_negative(&e, 1, 2).unwrap(), TropValue::frac(-7, 2));
        assert_eq!(minor_by_paths(&e, 1, 2).unwrap(), TropValue::frac(-7, 2));
        for i in 1..=3 {
            assert_eq!(minor_formula_negative(&e, i, i).unwrap(), v(0));
        }
    }

    #[test]
    fn minor_formula_overshoots_on_four_by_four() {
        // the heaviest 2 -> 1 path is 2 -> 3 -> 4 -> 1 (weight -3); the closed form
        // combines eps_23 with eps_41 although 3 and 4 differ
        let e = DistortionMatrix::from_off_diagonal(4, &[v(-20), v(-10), v(-1), v(-1), v(-10), v(-1)]).unwrap();
        let enumerated = minor_det(e.matrix(), 0, 1).value;
        assert_eq!(enumerated, v(-3));
        assert_eq!(minor_by_paths(&e, 1, 2).unwrap(), v(-3));
        assert_eq!(minor_formula_negative(&e, 1, 2).unwrap(), v(-2));
    }
}
