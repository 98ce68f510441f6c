//! Subset-indexed form matrices.
//!
//! Rows and columns are the size-`m` subsets of `{1..n}` in colex order, and
//! every entry depends only on `j = #(α ∩ β)`:
//!
//! | kind        | entry                                             |
//! |-------------|---------------------------------------------------|
//! | `phi`       | `j`                                               |
//! | `tilde_phi` | `m − j + 1`                                       |
//! | `tilde_psi` | `1 / (m − j + 1)`                                 |
//! | `psi`       | `m(n−m) − (m+1)(n−m+1)(m−j)/(m−j+1)`              |
//!
//! `psi` is positive semidefinite with `e` (all ones) in its kernel, and
//! `a(m)ᵀ Ψ a(m) ≥ 0` for the minor vector `a(m) = (A[α])_α` is the
//! strengthened form of the `m`th Newton inequality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{binomial_u128, colex_masks, sym_eigenvalues, Matrix};

/// Default cap on the form dimension `C(n, m)`.
pub const FORM_DIM_CAP: u128 = 5000;
/// Default relative tolerance for PSD verdicts.
pub const PSD_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Phi,
    TildePhi,
    TildePsi,
    Psi,
}

impl FormKind {
    /// Entry for a pair of `m`-subsets of `{1..n}` meeting in `j` elements.
    pub fn entry(self, n: usize, m: usize, j: usize) -> f64 {
        let (n, m, j) = (n as f64, m as f64, j as f64);
        match self {
            FormKind::Phi => j,
            FormKind::TildePhi => m - j + 1.0,
            FormKind::TildePsi => 1.0 / (m - j + 1.0),
            FormKind::Psi => m * (n - m) - (m + 1.0) * (n - m + 1.0) * (m - j) / (m - j + 1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FormMatrix {
    pub n: usize,
    pub m: usize,
    pub kind: FormKind,
    pub matrix: Matrix,
}

impl FormMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.order()
    }
}

fn check_dims(n: usize, m: usize, override_cap: bool) -> Result<usize> {
    if m == 0 || m >= n {
        return Err(Error::input("m", format!("need 1 ≤ m ≤ n − 1, got m = {m}, n = {n}")));
    }
    if n > crate::linalg::MAX_AMBIENT {
        return Err(Error::input("n", "n too large for subset enumeration"));
    }
    let dim = binomial_u128(n as u64, m as u64);
    if dim > FORM_DIM_CAP && !override_cap {
        return Err(Error::CapExceeded {
            what: "form dimension C(n, m)".into(),
            size: dim,
            cap: FORM_DIM_CAP,
        });
    }
    Ok(dim as usize)
}

pub fn build_form(n: usize, m: usize, kind: FormKind, override_cap: bool) -> Result<FormMatrix> {
    check_dims(n, m, override_cap)?;
    let masks = colex_masks(n, m);
    let table: Vec<f64> = (0..=m).map(|j| kind.entry(n, m, j)).collect();
    let matrix = Matrix::from_fn(masks.len(), |a, b| {
        table[(masks[a] & masks[b]).count_ones() as usize]
    });
    Ok(FormMatrix { n, m, kind, matrix })
}

/// Vector indexed by the colex-ordered `m`-subsets of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsetVector {
    pub n: usize,
    pub m: usize,
    pub values: Vec<f64>,
}

impl SubsetVector {
    pub fn new(n: usize, m: usize, values: Vec<f64>) -> Result<Self> {
        let dim = binomial_u128(n as u64, m as u64);
        if values.len() as u128 != dim {
            return Err(Error::input(
                "values",
                format!("length {} does not match C({n}, {m}) = {dim}", values.len()),
            ));
        }
        Ok(SubsetVector { n, m, values })
    }

    /// The all-ones vector `e`.
    pub fn ones(n: usize, m: usize) -> Self {
        let dim = binomial_u128(n as u64, m as u64) as usize;
        SubsetVector {
            n,
            m,
            values: vec![1.0; dim],
        }
    }

    /// `a(m) = (A[α])_{#α = m}`.
    pub fn minors_of(a: &Matrix, m: usize) -> Result<Self> {
        let t = crate::sfunc::MinorTable::new(a, false)?;
        SubsetVector::new(a.order(), m, t.minor_vector(m))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsdReport {
    pub psd: bool,
    pub min_eigenvalue: f64,
    pub max_abs: f64,
}

/// PSD iff the smallest eigenvalue is `≥ −tol · maxabs(F)`.
pub fn psd_check(f: &FormMatrix, tol: f64) -> Result<PsdReport> {
    let ev = sym_eigenvalues(&f.matrix)?;
    let max_abs = f.matrix.max_abs();
    let min_eigenvalue = ev[0];
    Ok(PsdReport {
        psd: min_eigenvalue >= -tol * max_abs,
        min_eigenvalue,
        max_abs,
    })
}

/// Number of eigenvalues above `tol · maxabs(F)`.
pub fn positive_eigenvalue_count(f: &FormMatrix, tol: f64) -> Result<usize> {
    let bound = tol * f.matrix.max_abs();
    Ok(sym_eigenvalues(&f.matrix)?.into_iter().filter(|&x| x > bound).count())
}

/// Largest absolute deviation for each structural relation between the forms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    /// `Φ = V Vᵀ` for the subset–element incidence matrix `V`.
    pub gramian: f64,
    /// `Φ̃ + Φ = (m+1) e eᵀ`.
    pub complement: f64,
    /// `Ψ̃ ∘ Φ̃ = e eᵀ` (entrywise reciprocal).
    pub hadamard_inverse: f64,
    /// `Ψ = (m+1)(n−m+1) Ψ̃ − (n+1) e eᵀ`.
    pub psi_decomposition: f64,
    /// `‖Ψ e‖_∞`.
    pub psi_null: f64,
    pub psi_max_abs: f64,
    pub holds: bool,
}

pub fn structure_checks(n: usize, m: usize, tol: f64, override_cap: bool) -> Result<StructureReport> {
    check_dims(n, m, override_cap)?;
    let phi = build_form(n, m, FormKind::Phi, override_cap)?.matrix;
    let tphi = build_form(n, m, FormKind::TildePhi, override_cap)?.matrix;
    let tpsi = build_form(n, m, FormKind::TildePsi, override_cap)?.matrix;
    let psi = build_form(n, m, FormKind::Psi, override_cap)?.matrix;
    let dim = phi.order();

    let incidence: Vec<Vec<f64>> = colex_masks(n, m)
        .into_iter()
        .map(|mask| (0..n).map(|i| (mask >> i & 1) as f64).collect())
        .collect();

    let mut gramian = 0.0f64;
    let mut complement = 0.0f64;
    let mut hadamard_inverse = 0.0f64;
    let mut psi_decomposition = 0.0f64;
    let mp1 = (m + 1) as f64;
    let outer = mp1 * (n - m + 1) as f64;
    for a in 0..dim {
        for b in 0..dim {
            let vv: f64 = incidence[a].iter().zip(&incidence[b]).map(|(x, y)| x * y).sum();
            gramian = gramian.max((phi[(a, b)] - vv).abs());
            complement = complement.max((tphi[(a, b)] + phi[(a, b)] - mp1).abs());
            hadamard_inverse = hadamard_inverse.max((tpsi[(a, b)] * tphi[(a, b)] - 1.0).abs());
            let rebuilt = outer * tpsi[(a, b)] - (n + 1) as f64;
            psi_decomposition = psi_decomposition.max((psi[(a, b)] - rebuilt).abs());
        }
    }
    let psi_null = (0..dim)
        .map(|a| psi.row(a).iter().sum::<f64>().abs())
        .fold(0.0f64, f64::max);
    let psi_max_abs = psi.max_abs();
    let bound = tol * psi_max_abs;
    let holds = gramian == 0.0
        && complement == 0.0
        && hadamard_inverse <= tol
        && psi_decomposition <= bound
        && psi_null <= bound;
    Ok(StructureReport {
        n,
        m,
        gramian,
        complement,
        hadamard_inverse,
        psi_decomposition,
        psi_null,
        psi_max_abs,
        holds,
    })
}

fn binomial_big(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `Σ_{j=0}^{m} (m(n−m) − (m+1)(n−m+1)(m−j)/(m−j+1)) · C(m,j) · C(n−m,m−j)`
/// in exact rational arithmetic. Vanishes for all `1 ≤ m ≤ n − 1`.
pub fn binomial_identity_sum(n: usize, m: usize) -> Result<BigRational> {
    if m == 0 || m >= n {
        return Err(Error::input("m", format!("need 1 ≤ m ≤ n − 1, got m = {m}, n = {n}")));
    }
    let (n, m) = (n as i64, m as i64);
    let base = BigRational::from_integer(BigInt::from(m * (n - m)));
    let outer = BigInt::from((m + 1) * (n - m + 1));
    let mut sum = BigRational::zero();
    for j in 0..=m {
        let frac = BigRational::new(outer.clone() * BigInt::from(m - j), BigInt::from(m - j + 1));
        let coef = &base - frac;
        let count = binomial_big(m, j) * binomial_big(n - m, m - j);
        sum += coef * BigRational::from_integer(count);
    }
    Ok(sum)
}

/// `tᵀ F t`.
pub fn quadratic_apply(f: &FormMatrix, t: &SubsetVector) -> Result<f64> {
    if t.n != f.n || t.m != f.m || t.values.len() != f.dim() {
        return Err(Error::input(
            "t",
            format!(
                "vector for (n, m) = ({}, {}) of length {} does not fit form ({}, {}) of dimension {}",
                t.n,
                t.m,
                t.values.len(),
                f.n,
                f.m,
                f.dim()
            ),
        ));
    }
    let x = &t.values;
    Ok((0..f.dim())
        .map(|a| x[a] * f.matrix.row(a).iter().zip(x).map(|(p, q)| p * q).sum::<f64>())
        .sum())
}

/// `tᵀ Ψ_m t`; `f` must be of kind `psi`.
pub fn psi_quadratic_apply(f: &FormMatrix, t: &SubsetVector) -> Result<f64> {
    if f.kind != FormKind::Psi {
        return Err(Error::input("kind", "expected a psi form"));
    }
    quadratic_apply(f, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sfunc::{MinorTable, SParams};

    #[test]
    fn build_examples() {
        let psi = build_form(2, 1, FormKind::Psi, false).unwrap();
        assert_eq!(psi.matrix.to_rows(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        let phi = build_form(3, 1, FormKind::Phi, false).unwrap();
        assert_eq!(phi.matrix, Matrix::identity(3));
        let tphi = build_form(3, 2, FormKind::TildePhi, false).unwrap();
        // j = m on the diagonal, so m − j + 1 = 1 there
        assert_eq!(
            tphi.matrix.to_rows(),
            vec![vec![1.0, 2.0, 2.0], vec![2.0, 1.0, 2.0], vec![2.0, 2.0, 1.0]]
        );
        let phi32 = build_form(3, 2, FormKind::Phi, false).unwrap();
        assert_eq!(
            phi32.matrix.to_rows(),
            vec![vec![2.0, 1.0, 1.0], vec![1.0, 2.0, 1.0], vec![1.0, 1.0, 2.0]]
        );
    }

    #[test]
    fn build_errors() {
        assert!(build_form(3, 0, FormKind::Psi, false).is_err());
        assert!(build_form(3, 3, FormKind::Psi, false).is_err());
        // C(16, 8) = 12870 > 5000
        assert!(matches!(
            build_form(16, 8, FormKind::Psi, false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn psd_examples() {
        let r = psd_check(&build_form(2, 1, FormKind::Psi, false).unwrap(), PSD_TOL).unwrap();
        assert!(r.psd && r.min_eigenvalue.abs() < 1e-15);
        for n in 2..=8 {
            for m in 1..n {
                for kind in [FormKind::TildePsi, FormKind::Phi] {
                    let f = build_form(n, m, kind, false).unwrap();
                    assert!(psd_check(&f, PSD_TOL).unwrap().psd, "{kind:?} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn tilde_phi_has_one_positive_eigenvalue() {
        for n in 2..=8 {
            for m in 1..n {
                let f = build_form(n, m, FormKind::TildePhi, false).unwrap();
                assert_eq!(positive_eigenvalue_count(&f, 1e-10).unwrap(), 1, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn structure_examples() {
        let r = structure_checks(2, 1, 1e-10, false).unwrap();
        assert!(r.holds && r.psi_null == 0.0);
        let r = structure_checks(4, 2, 1e-10, false).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.gramian, 0.0);
        assert_eq!(r.complement, 0.0);
    }

    #[test]
    fn binomial_identity_examples() {
        assert!(binomial_identity_sum(2, 1).unwrap().is_zero());
        assert!(binomial_identity_sum(6, 3).unwrap().is_zero());
        assert!(binomial_identity_sum(5, 0).is_err());
    }

    #[test]
    fn binomial_identity_is_not_vacuous() {
        // dropping the last term must leave a nonzero remainder
        let (n, m) = (6i64, 3i64);
        let last = BigRational::from_integer(BigInt::from(m * (n - m)))
            * BigRational::from_integer(binomial_big(n - m, 0));
        let full = binomial_identity_sum(6, 3).unwrap();
        assert!(!(full - last).is_zero());
    }

    #[test]
    fn quadratic_examples() {
        let psi = build_form(2, 1, FormKind::Psi, false).unwrap();
        let e = SubsetVector::ones(2, 1);
        assert_eq!(psi_quadratic_apply(&psi, &e).unwrap(), 0.0);
        let a = SubsetVector::minors_of(&Matrix::diag(&[1.0, 2.0]), 1).unwrap();
        assert_eq!(a.values, vec![1.0, 2.0]);
        assert_eq!(psi_quadratic_apply(&psi, &a).unwrap(), 1.0);
        let wrong = SubsetVector::ones(3, 1);
        assert!(psi_quadratic_apply(&psi, &wrong).is_err());
        let phi = build_form(2, 1, FormKind::Phi, false).unwrap();
        assert!(psi_quadratic_apply(&phi, &e).is_err());
    }

    #[test]
    fn quadratic_of_minor_vector_is_weighted_s_sum() {
        let a = crate::mclass::uniform_matrix(6, 11, -1.0, 1.0);
        let t = MinorTable::new(&a, false).unwrap();
        let n = 6;
        for m in 1..n {
            let psi = build_form(n, m, FormKind::Psi, false).unwrap();
            let v = SubsetVector::new(n, m, t.minor_vector(m)).unwrap();
            let q = psi_quadratic_apply(&psi, &v).unwrap();
            let weighted: f64 = (0..=m)
                .map(|j| FormKind::Psi.entry(n, m, j) * t.s(SParams::new(n, m, m, j).unwrap()))
                .sum();
            assert!((q - weighted).abs() <= 1e-12 * weighted.abs().max(1.0), "m={m}");
        }
    }
}
