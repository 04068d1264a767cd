//! Square max-plus matrices: determinant, minors and the tropical adjoint.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{t_mul, TropValue};

/// Largest side length accepted by [`trop_det`]; achiever counting needs
/// the full permutation enumeration.
pub const MAX_DET_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<TropValue>,
    symmetric: bool,
    /// 1-based indices of the rows/columns in the matrix this one was cut from.
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
}

impl TropMatrix {
    /// Builds a matrix from rows. The symmetric marker is validated.
    pub fn from_rows(rows: Vec<Vec<TropValue>>, symmetric: bool) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { expected: n, found: row.len() });
            }
            entries.extend(row);
        }
        let m = TropMatrix { n, entries, symmetric, row_labels: (1..=n).collect(), col_labels: (1..=n).collect() };
        if symmetric {
            m.check_symmetric()?;
        }
        Ok(m)
    }

    /// Builds a symmetric matrix from its upper triangle in row-major order:
    /// `a11, a12, ..., a1n, a22, ..., ann`.
    pub fn symmetric_from_upper(n: usize, upper: &[TropValue]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let expected = n * (n + 1) / 2;
        if upper.len() != expected {
            return Err(Error::NotSquare { expected, found: upper.len() });
        }
        let mut rows = vec![vec![TropValue::NegInf; n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i..n {
                let v = *it.next().expect("length checked");
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        Self::from_rows(rows, true)
    }

    /// Builds a 3x3 conic matrix from `(a1, ..., a6)` with `a1, a2, a3` on
    /// the diagonal and `a4 = (1,2)`, `a5 = (1,3)`, `a6 = (2,3)`.
    pub fn conic(a: [TropValue; 6]) -> Self {
        let [a1, a2, a3, a4, a5, a6] = a;
        Self::from_rows(vec![vec![a1, a4, a5], vec![a4, a2, a6], vec![a5, a6, a3]], true)
            .expect("conic layout is symmetric")
    }

    pub fn from_fn(n: usize, symmetric: bool, f: impl Fn(usize, usize) -> TropValue) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::from_rows(rows, symmetric)
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> TropValue {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[TropValue] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<TropValue>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    /// Diagonal first, then the strict upper triangle row by row. For a
    /// 3x3 symmetric matrix this is the `(a1, ..., a6)` conic layout.
    pub fn diag_then_upper(&self) -> Vec<TropValue> {
        let mut out: Vec<TropValue> = (0..self.n).map(|i| self.get(i, i)).collect();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Upper triangle including the diagonal, row-major.
    pub fn upper(&self) -> Vec<TropValue> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 0..self.n {
            for j in i..self.n {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix {
            n: self.n,
            entries: (0..self.n * self.n).map(|k| self.get(k % self.n, k / self.n)).collect(),
            symmetric: self.symmetric,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// Entrywise `⊙ c`.
    pub fn shift(&self, c: TropValue) -> TropMatrix {
        TropMatrix { entries: self.entries.iter().map(|&v| t_mul(v, c)).collect(), ..self.clone() }
    }

    pub fn entries(&self) -> &[TropValue] {
        &self.entries
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropDetResult {
    pub value: TropValue,
    /// Number of permutations attaining `value`.
    pub achiever_count: u64,
    pub degenerate: bool,
    /// One maximizing permutation, `perm[i]` = column of row `i` (0-based).
    pub witness: Vec<usize>,
}

/// Tropical determinant (permanent) by full permutation enumeration.
pub fn trop_det(m: &TropMatrix) -> Result<TropDetResult> {
    if m.n > MAX_DET_SIZE {
        return Err(Error::TooLarge { n: m.n, max: MAX_DET_SIZE });
    }
    Ok(det_unchecked(m.n, &m.entries))
}

struct DetSearch<'a> {
    n: usize,
    entries: &'a [TropValue],
    best: TropValue,
    count: u64,
    perm: Vec<usize>,
    witness: Vec<usize>,
}

impl DetSearch<'_> {
    fn visit(&mut self, row: usize, used: u32, partial: TropValue) {
        if row == self.n {
            match partial.cmp(&self.best) {
                std::cmp::Ordering::Greater => {
                    self.best = partial;
                    self.count = 1;
                    self.witness.clone_from(&self.perm);
                }
                std::cmp::Ordering::Equal => self.count += 1,
                std::cmp::Ordering::Less => {}
            }
            return;
        }
        for col in 0..self.n {
            if used & (1 << col) != 0 {
                continue;
            }
            let next = t_mul(partial, self.entries[row * self.n + col]);
            self.perm[row] = col;
            if next == TropValue::NegInf {
                // Every completion is -inf as well.
                if self.best == TropValue::NegInf {
                    if self.count == 0 {
                        self.witness = complete_perm(&self.perm, row, used | (1 << col), self.n);
                    }
                    self.count += factorial(self.n - row - 1);
                }
                continue;
            }
            self.visit(row + 1, used | (1 << col), next);
        }
    }
}

fn complete_perm(prefix: &[usize], row: usize, used: u32, n: usize) -> Vec<usize> {
    let mut out = prefix[..=row].to_vec();
    out.extend((0..n).filter(|c| used & (1 << c) == 0));
    out
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn det_unchecked(n: usize, entries: &[TropValue]) -> TropDetResult {
    let mut search = DetSearch { n, entries, best: TropValue::NegInf, count: 0, perm: vec![0; n], witness: Vec::new() };
    search.visit(0, 0, TropValue::ONE);
    TropDetResult {
        value: search.best,
        achiever_count: search.count,
        degenerate: search.count >= 2,
        witness: search.witness,
    }
}

/// Deletes row `i` and column `j` (both 1-based).
pub fn trop_minor(m: &TropMatrix, i: usize, j: usize) -> Result<TropMatrix> {
    if m.n < 2 {
        return Err(Error::MinorOfScalar);
    }
    if i == 0 || j == 0 || i > m.n || j > m.n {
        return Err(Error::IndexOutOfRange { row: i, col: j, n: m.n });
    }
    Ok(minor_unchecked(m, i - 1, j - 1))
}

fn minor_unchecked(m: &TropMatrix, row: usize, col: usize) -> TropMatrix {
    let n = m.n - 1;
    let mut entries = Vec::with_capacity(n * n);
    for r in (0..m.n).filter(|&r| r != row) {
        for c in (0..m.n).filter(|&c| c != col) {
            entries.push(m.get(r, c));
        }
    }
    let drop = |labels: &[usize], k: usize| -> Vec<usize> {
        labels.iter().enumerate().filter(|&(p, _)| p != k).map(|(_, &l)| l).collect()
    };
    TropMatrix {
        n,
        entries,
        symmetric: m.symmetric && row == col,
        row_labels: drop(&m.row_labels, row),
        col_labels: drop(&m.col_labels, col),
    }
}

/// Determinant of the minor obtained by deleting 0-based row `i`, column `j`.
pub(crate) fn minor_det(m: &TropMatrix, i: usize, j: usize) -> TropDetResult {
    let minor = minor_unchecked(m, i, j);
    det_unchecked(minor.n, &minor.entries)
}

/// Matrix of minor determinants: `out[i][j] = |M_{i,j}|`.
///
/// Uses rayon across entries when the `parallel` feature is enabled.
pub fn trop_adjoint(m: &TropMatrix) -> Result<TropMatrix> {
    #[cfg(feature = "parallel")]
    {
        trop_adjoint_par(m)
    }
    #[cfg(not(feature = "parallel"))]
    {
        trop_adjoint_seq(m)
    }
}

fn adjoint_cells(m: &TropMatrix) -> Result<Vec<(usize, usize)>> {
    if m.n < 2 {
        return Err(Error::MinorOfScalar);
    }
    if m.n - 1 > MAX_DET_SIZE {
        return Err(Error::TooLarge { n: m.n - 1, max: MAX_DET_SIZE });
    }
    let n = m.n;
    Ok(if m.symmetric {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    } else {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    })
}

fn assemble_adjoint(m: &TropMatrix, cells: &[(usize, usize)], values: Vec<TropValue>) -> TropMatrix {
    let n = m.n;
    let mut entries = vec![TropValue::NegInf; n * n];
    for (&(i, j), v) in cells.iter().zip(values) {
        entries[i * n + j] = v;
        if m.symmetric {
            entries[j * n + i] = v;
        }
    }
    TropMatrix { n, entries, symmetric: m.symmetric, row_labels: (1..=n).collect(), col_labels: (1..=n).collect() }
}

/// Sequential tropical adjoint.
pub fn trop_adjoint_seq(m: &TropMatrix) -> Result<TropMatrix> {
    let cells = adjoint_cells(m)?;
    let values = cells.iter().map(|&(i, j)| minor_det(m, i, j).value).collect();
    Ok(assemble_adjoint(m, &cells, values))
}

/// Tropical adjoint with the minor determinants evaluated on the rayon pool.
#[cfg(feature = "parallel")]
pub fn trop_adjoint_par(m: &TropMatrix) -> Result<TropMatrix> {
    use rayon::prelude::*;
    let cells = adjoint_cells(m)?;
    let values = cells.par_iter().map(|&(i, j)| minor_det(m, i, j).value).collect();
    Ok(assemble_adjoint(m, &cells, values))
}
