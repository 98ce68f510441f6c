//! Pair sums of principal minors
//! `S_{m1,m2,k}(A) = Σ A[α]·A[β]` over ordered pairs with `#α = m1`,
//! `#β = m2` and `#(α ∩ β) = k`, and the inequalities relating them.
//!
//! Pairs are ordered: `(α, β)` and `(β, α)` both contribute, which is what
//! makes `c_m² = Σ_j S_{m,m,j} / C(n,m)²` hold.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::charcoeff::normalized_coeffs;
use crate::error::{Error, Result};
use crate::linalg::{binomial_signed, binomial_u128, colex_masks, principal_minor_mask, Matrix};

/// Largest order accepted without the override flag.
pub const S_VALUE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SParams {
    pub n: usize,
    pub m1: usize,
    pub m2: usize,
    pub k: usize,
}

impl SParams {
    pub fn new(n: usize, m1: usize, m2: usize, k: usize) -> Result<Self> {
        if m1 > n || m2 > n {
            return Err(Error::input("m", format!("sizes ({m1}, {m2}) exceed n = {n}")));
        }
        if k > m1.min(m2) {
            return Err(Error::input("k", format!("overlap {k} exceeds min({m1}, {m2})")));
        }
        Ok(SParams { n, m1, m2, k })
    }

    /// Some pair has the required overlap iff `m1 + m2 − k ≤ n`.
    pub fn is_feasible(&self) -> bool {
        self.m1 + self.m2 - self.k <= self.n
    }
}

/// Principal minors of one matrix, grouped by size in colex order and
/// computed once.
#[derive(Debug, Clone)]
pub struct MinorTable {
    n: usize,
    by_size: Vec<Vec<(u64, f64)>>,
}

impl MinorTable {
    pub fn new(a: &Matrix, override_cap: bool) -> Result<Self> {
        let n = a.order();
        if n > S_VALUE_CAP && !override_cap {
            return Err(Error::CapExceeded {
                what: "S-function order".into(),
                size: n as u128,
                cap: S_VALUE_CAP as u128,
            });
        }
        if n > crate::linalg::MAX_AMBIENT {
            return Err(Error::input("n", "order too large for subset enumeration"));
        }
        let by_size = (0..=n)
            .map(|m| {
                colex_masks(n, m)
                    .into_iter()
                    .map(|mask| (mask, principal_minor_mask(a, mask)))
                    .collect()
            })
            .collect();
        Ok(MinorTable { n, by_size })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `(mask, A[α])` for every `α` of size `m`, colex order.
    pub fn minors(&self, m: usize) -> &[(u64, f64)] {
        &self.by_size[m]
    }

    /// `a(m) = (A[α])_α` in colex order.
    pub fn minor_vector(&self, m: usize) -> Vec<f64> {
        self.by_size[m].iter().map(|&(_, v)| v).collect()
    }

    /// `S_{m1,m2,k}` for every `k = 0..=min(m1, m2)`.
    ///
    /// The outer loop always runs over the smaller size, so swapping `m1`
    /// and `m2` reproduces the same floating-point sum bit for bit.
    pub fn s_by_overlap(&self, m1: usize, m2: usize) -> Vec<f64> {
        let (lo, hi) = (m1.min(m2), m1.max(m2));
        let mut acc = vec![0.0; lo + 1];
        for &(a, va) in &self.by_size[lo] {
            for &(b, vb) in &self.by_size[hi] {
                acc[(a & b).count_ones() as usize] += va * vb;
            }
        }
        acc
    }

    pub fn s(&self, p: SParams) -> f64 {
        debug_assert_eq!(p.n, self.n);
        if !p.is_feasible() {
            return 0.0;
        }
        let (lo, hi) = (p.m1.min(p.m2), p.m1.max(p.m2));
        let mut acc = 0.0;
        for &(a, va) in &self.by_size[lo] {
            for &(b, vb) in &self.by_size[hi] {
                if (a & b).count_ones() as usize == p.k {
                    acc += va * vb;
                }
            }
        }
        acc
    }
}

fn check_order(a: &Matrix, p: &SParams) -> Result<()> {
    if a.order() != p.n {
        return Err(Error::input(
            "n",
            format!("parameters are for n = {}, matrix has order {}", p.n, a.order()),
        ));
    }
    Ok(())
}

/// `S_{m1,m2,k}(A)`; zero for infeasible parameters.
pub fn s_value(a: &Matrix, p: SParams, override_cap: bool) -> Result<f64> {
    check_order(a, &p)?;
    Ok(MinorTable::new(a, override_cap)?.s(p))
}

/// `S_{m1,m2,k}(I_n) = C(n,k) · C(n−k, m1−k) · C(n−m1, m2−k)`: choose the
/// overlap, then the rest of `α`, then the rest of `β` outside `α`.
pub fn s_identity(p: SParams) -> BigUint {
    let (n, m1, m2, k) = (p.n as i64, p.m1 as i64, p.m2 as i64, p.k as i64);
    BigUint::from(binomial_signed(n, k))
        * BigUint::from(binomial_signed(n - k, m1 - k))
        * BigUint::from(binomial_signed(n - m1, m2 - k))
}

fn s_identity_f64(p: SParams) -> f64 {
    let (n, m1, m2, k) = (p.n as i64, p.m1 as i64, p.m2 as i64, p.k as i64);
    binomial_signed(n, k) as f64
        * binomial_signed(n - k, m1 - k) as f64
        * binomial_signed(n - m1, m2 - k) as f64
}

/// Outcome of a one-sided inequality `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub m: usize,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// `max(|lhs|, |rhs|)`; tolerances are relative to this.
    pub scale: f64,
    pub holds: bool,
}

impl InequalityReport {
    fn new(m: usize, k: usize, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = lhs - rhs;
        let scale = lhs.abs().max(rhs.abs());
        InequalityReport {
            m,
            k,
            lhs,
            rhs,
            margin,
            scale,
            holds: margin >= -tol * scale,
        }
    }
}

fn check_m_k(n: usize, m: usize, k: usize) -> Result<()> {
    if m == 0 || m >= n {
        return Err(Error::input("m", format!("need 1 ≤ m < n = {n}, got {m}")));
    }
    if k > m {
        return Err(Error::input("k", format!("need k ≤ m = {m}, got {k}")));
    }
    Ok(())
}

/// `S_{m,m,k}(A)/S_{m,m,k}(I) ≥ S_{m+1,m−1,k}(A)/S_{m+1,m−1,k}(I)` using a
/// prebuilt minor table.
pub fn genimm_from_table(t: &MinorTable, m: usize, k: usize, tol: f64) -> Result<InequalityReport> {
    let n = t.order();
    check_m_k(n, m, k)?;
    if k >= m {
        return Err(Error::input("k", format!("need k < m = {m}, got {k}")));
    }
    let same = SParams::new(n, m, m, k)?;
    let skew = SParams::new(n, m + 1, m - 1, k)?;
    if !same.is_feasible() {
        return Err(Error::input(
            "k",
            format!("2m − k = {} exceeds n = {n}; identity counts vanish", 2 * m - k),
        ));
    }
    let lhs = t.s(same) / s_identity_f64(same);
    let rhs = t.s(skew) / s_identity_f64(skew);
    Ok(InequalityReport::new(m, k, lhs, rhs, tol))
}

pub fn genimm_check(a: &Matrix, m: usize, k: usize, tol: f64) -> Result<InequalityReport> {
    genimm_from_table(&MinorTable::new(a, false)?, m, k, tol)
}

/// `(m−j)·S_{m,m,j}(A) ≥ (m−j+1)·S_{m+1,m−1,j}(A)`, the unnormalized form.
pub fn pointwise_from_table(t: &MinorTable, m: usize, j: usize, tol: f64) -> Result<InequalityReport> {
    let n = t.order();
    check_m_k(n, m, j)?;
    let same = t.s(SParams::new(n, m, m, j)?);
    let skew = if j < m {
        t.s(SParams::new(n, m + 1, m - 1, j)?)
    } else {
        0.0
    };
    let lhs = (m - j) as f64 * same;
    let rhs = (m - j + 1) as f64 * skew;
    Ok(InequalityReport::new(m, j, lhs, rhs, tol))
}

pub fn pointwise_check(a: &Matrix, m: usize, j: usize, tol: f64) -> Result<InequalityReport> {
    pointwise_from_table(&MinorTable::new(a, false)?, m, j, tol)
}

/// Both sides of the two expansion identities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub m: usize,
    /// `c_m²` from the trace recursion.
    pub square: f64,
    /// `Σ_j S_{m,m,j} / C(n,m)²`.
    pub square_from_s: f64,
    /// `c_{m−1} c_{m+1}` from the trace recursion.
    pub product: f64,
    /// `Σ_j S_{m+1,m−1,j} / (C(n,m+1) C(n,m−1))`.
    pub product_from_s: f64,
    pub square_rel_err: f64,
    pub product_rel_err: f64,
    pub holds: bool,
}

/// Relative errors are taken against the larger of both sides and the
/// magnitude of the summed terms, `(Σ|A[α]|/C)²`-style, so cancellation in
/// indefinite matrices is not mistaken for disagreement.
pub fn expansion_from_table(a: &Matrix, t: &MinorTable, m: usize, tol: f64) -> Result<ExpansionReport> {
    let n = a.order();
    check_m_k(n, m, 0)?;
    let c = normalized_coeffs(a).c;
    let binom = |j: usize| binomial_u128(n as u64, j as u64) as f64;
    let abs_mean = |size: usize| t.minors(size).iter().map(|(_, v)| v.abs()).sum::<f64>() / binom(size);

    let square = c[m] * c[m];
    let square_from_s = t.s_by_overlap(m, m).iter().sum::<f64>() / (binom(m) * binom(m));
    let product = c[m - 1] * c[m + 1];
    let product_from_s = t.s_by_overlap(m + 1, m - 1).iter().sum::<f64>() / (binom(m + 1) * binom(m - 1));

    let rel = |x: f64, y: f64, mag: f64| {
        let d = x.abs().max(y.abs()).max(mag);
        if d == 0.0 {
            0.0
        } else {
            (x - y).abs() / d
        }
    };
    let square_rel_err = rel(square, square_from_s, abs_mean(m).powi(2));
    let product_rel_err = rel(product, product_from_s, abs_mean(m - 1) * abs_mean(m + 1));
    Ok(ExpansionReport {
        m,
        square,
        square_from_s,
        product,
        product_from_s,
        square_rel_err,
        product_rel_err,
        holds: square_rel_err <= tol && product_rel_err <= tol,
    })
}

pub fn expansion_identity_check(a: &Matrix, m: usize, tol: f64) -> Result<bool> {
    Ok(expansion_from_table(a, &MinorTable::new(a, false)?, m, tol)?.holds)
}

/// For `2m − k = n`: relative deviation of `S_{m,m,k}(A)/(det A)²` from
/// `S_{n−m,n−m,0}(A⁻¹)`.
pub fn duality_deviation(a: &Matrix, m: usize, k: usize) -> Result<f64> {
    let n = a.order();
    if 2 * m < k || 2 * m - k != n || k > m {
        return Err(Error::input("m", format!("duality needs 2m − k = n, got m = {m}, k = {k}")));
    }
    let det = a.determinant();
    let inv = a.inverse()?;
    let lhs = s_value(a, SParams::new(n, m, m, k)?, false)? / (det * det);
    let rhs = s_value(&inv, SParams::new(n, n - m, n - m, 0)?, false)?;
    Ok(relative_gap(lhs, rhs))
}

/// For `m1 + m2 − k < n`: relative deviation of `S(A)/S(I_n)` from the mean
/// of `S(A(i′))/S(I_{n−1})` over the `n` principal submatrices of order `n − 1`.
pub fn averaging_deviation(a: &Matrix, p: SParams) -> Result<f64> {
    let n = a.order();
    check_order(a, &p)?;
    if p.m1 + p.m2 - p.k >= n {
        return Err(Error::input("k", "averaging needs m1 + m2 − k < n"));
    }
    let whole = s_value(a, p, false)? / s_identity_f64(p);
    let sub_p = SParams::new(n - 1, p.m1, p.m2, p.k)?;
    let sub_count = s_identity_f64(sub_p);
    let mut mean = 0.0;
    for drop in 0..n {
        let keep: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
        let sub = Matrix::from_fn(n - 1, |i, j| a[(keep[i], keep[j])]);
        mean += s_value(&sub, sub_p, false)? / sub_count;
    }
    mean /= n as f64;
    Ok(relative_gap(whole, mean))
}

fn relative_gap(x: f64, y: f64) -> f64 {
    let d = x.abs().max(y.abs());
    if d == 0.0 {
        0.0
    } else {
        (x - y).abs() / d
    }
}

/// Every `(m, k)` with `1 ≤ m < n`, `k < m` and `2m − k ≤ n`.
pub fn feasible_genimm_params(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..n {
        for k in 0..m {
            if 2 * m - k <= n {
                out.push((m, k));
            }
        }
    }
    out
}
