use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::linalg::IndexSet;

/// Pivots with `|pivot| <= PIVOT_EPS * maxabs(original row)` count as zero.
pub const PIVOT_EPS: f64 = 1e-13;

/// Dense real square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds an `n × n` matrix from row-major entries.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("n", "order must be positive"));
        }
        if data.len() != n * n {
            return Err(Error::input(
                "rows",
                format!("expected {} entries, found {}", n * n, data.len()),
            ));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::input(
                "rows",
                format!("entry ({}, {}) is not finite", pos / n, pos % n),
            ));
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(
                    format!("rows[{i}]"),
                    format!("row has {} entries, matrix order is {n}", row.len()),
                ));
            }
            data.extend_from_slice(row);
        }
        Matrix::new(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix order must be positive");
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Matrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Builds a matrix from a closure `f(i, j)` over 0-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Order `n` of the matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn scaled(&self, s: f64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: f64) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] += shift;
        }
        m
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "order mismatch in matmul");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// Largest absolute deviation from symmetry.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// `P A Pᵀ` where row/column `i` of the result is row/column `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.n);
        Matrix::from_fn(self.n, |i, j| self[(perm[i], perm[j])])
    }

    /// Principal submatrix `A(α)`. Returns `None` for the empty set.
    pub fn principal_submatrix(&self, alpha: &IndexSet) -> Result<Option<Matrix>> {
        self.check_index_set(alpha)?;
        if alpha.is_empty() {
            return Ok(None);
        }
        let idx: Vec<usize> = alpha.zero_based().collect();
        let k = idx.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in &idx {
            for &j in &idx {
                data.push(self[(i, j)]);
            }
        }
        Ok(Some(Matrix { n: k, data }))
    }

    fn check_index_set(&self, alpha: &IndexSet) -> Result<()> {
        if alpha.ambient() != self.n {
            return Err(Error::input(
                "alpha",
                format!(
                    "index set over {{1..{}}} used with a matrix of order {}",
                    alpha.ambient(),
                    self.n
                ),
            ));
        }
        Ok(())
    }

    /// Determinant by row-pivoted Gaussian elimination.
    ///
    /// A pivot with `|pivot| <= 1e-13 * maxabs(original row)` is treated as an
    /// exact zero and the determinant returned is `0`.
    pub fn determinant(&self) -> f64 {
        determinant_of(self.n, self.data.clone())
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Matrix::identity(n).data;
        let row_scale: Vec<f64> = (0..n)
            .map(|i| a[i * n..(i + 1) * n].iter().fold(0.0, |m: f64, x| m.max(x.abs())))
            .collect();
        let mut scale_of_row = row_scale.clone();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))
                .expect("non-empty pivot range");
            let p = a[piv * n + col];
            if p.abs() <= PIVOT_EPS * scale_of_row[piv] || p == 0.0 {
                return Err(Error::Singular {
                    det: self.determinant(),
                });
            }
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
                scale_of_row.swap(piv, col);
            }
            let recip = 1.0 / p;
            for j in 0..n {
                a[col * n + j] *= recip;
                inv[col * n + j] *= recip;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= f * a[col * n + j];
                    inv[r * n + j] -= f * inv[col * n + j];
                }
            }
        }
        Ok(Matrix { n, data: inv })
    }
}

pub(crate) fn determinant_of(n: usize, mut a: Vec<f64>) -> f64 {
    if n == 1 {
        return a[0];
    }
    let mut scale: Vec<f64> = (0..n)
        .map(|i| a[i * n..(i + 1) * n].iter().fold(0.0, |m: f64, x| m.max(x.abs())))
        .collect();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))
            .expect("non-empty pivot range");
        let p = a[piv * n + col];
        if p == 0.0 || p.abs() <= PIVOT_EPS * scale[piv] {
            return 0.0;
        }
        if piv != col {
            for j in col..n {
                a.swap(piv * n + j, col * n + j);
            }
            scale.swap(piv, col);
            det = -det;
        }
        det *= p;
        for r in (col + 1)..n {
            let f = a[r * n + col] / p;
            if f == 0.0 {
                continue;
            }
            for j in (col + 1)..n {
                a[r * n + j] -= f * a[col * n + j];
            }
        }
    }
    det
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

/// `A[α]`, the principal minor on `alpha`. `A[∅] = 1`.
pub fn principal_minor(a: &Matrix, alpha: &IndexSet) -> Result<f64> {
    Ok(match a.principal_submatrix(alpha)? {
        None => 1.0,
        Some(sub) => sub.determinant(),
    })
}

/// Principal minor addressed by a 0-based bit mask. Unchecked; crate-internal
/// fast path for the enumeration-heavy modules.
pub(crate) fn principal_minor_mask(a: &Matrix, mask: u64) -> f64 {
    let idx: Vec<usize> = (0..a.n).filter(|i| mask >> i & 1 == 1).collect();
    let k = idx.len();
    if k == 0 {
        return 1.0;
    }
    let mut data = Vec::with_capacity(k * k);
    for &i in &idx {
        for &j in &idx {
            data.push(a.data[i * a.n + j]);
        }
    }
    determinant_of(k, data)
}
