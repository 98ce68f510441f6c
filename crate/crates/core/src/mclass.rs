//! Z-, P-, M- and inverse-M-matrix classification, plus seeded generators.
//!
//! Nonsingular M-detection uses the leading-principal-minor criterion, which
//! is equivalent to the full P-test for Z-matrices. The exhaustive P-test is
//! still run as an oracle up to [`P_TEST_CAP`]. Singular M-matrices are
//! recognized by probing `A + εI` at three decades of `ε`.
//!
//! All thresholds are relative: with `s = maxabs(A)`, an off-diagonal entry
//! counts as nonpositive when `≤ tol·s`, and a `k × k` minor counts as
//! positive when `> tol·s^k`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{colex_masks, principal_minor_mask, IndexSet, Matrix};

/// Largest order for which the exhaustive P-test runs.
pub const P_TEST_CAP: usize = 12;
/// Largest order accepted by [`dual_minor_identity_check`].
pub const DUAL_CHECK_CAP: usize = 10;
/// Shifts `ε / maxabs(A)` probed for singular M-membership.
pub const SINGULAR_PROBES: [f64; 3] = [1e-8, 1e-6, 1e-4];
/// Witness lists are truncated to this many entries.
const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MClass {
    MNonsingular,
    MSingular,
    NotM,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PTest {
    Yes,
    No,
    NotEvaluated,
}

/// A principal minor that violated a sign condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub alpha: Vec<usize>,
    pub value: f64,
}

/// A positive off-diagonal entry (1-based position).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryWitness {
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixClassReport {
    pub is_z: bool,
    pub is_p: PTest,
    pub m_class: MClass,
    pub is_inverse_m: bool,
    pub witnesses: Vec<MinorWitness>,
    pub z_violations: Vec<EntryWitness>,
}

fn scale_of(a: &Matrix) -> f64 {
    let s = a.max_abs();
    if s > 0.0 {
        s
    } else {
        1.0
    }
}

fn z_violations(a: &Matrix, tol: f64) -> Vec<EntryWitness> {
    let n = a.order();
    let bound = tol * scale_of(a);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && a[(i, j)] > bound {
                out.push(EntryWitness {
                    row: i + 1,
                    col: j + 1,
                    value: a[(i, j)],
                });
            }
        }
    }
    out
}

/// Leading principal minors `A[{1..k}]`, `k = 1..n`.
pub fn leading_minors(a: &Matrix) -> Vec<f64> {
    (1..=a.order())
        .map(|k| principal_minor_mask(a, (1u64 << k) - 1))
        .collect()
}

/// Nonsingular-M and singular-M membership without the inverse-M probe.
fn m_class_of(a: &Matrix, tol: f64, witnesses: &mut Vec<MinorWitness>) -> MClass {
    if !z_violations(a, tol).is_empty() {
        return MClass::NotM;
    }
    let s = scale_of(a);
    let lead = leading_minors(a);
    let mut nonsingular = true;
    let mut near = true;
    for (k, &v) in lead.iter().enumerate() {
        let bound = tol * s.powi(k as i32 + 1);
        if v <= bound {
            nonsingular = false;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push(MinorWitness {
                    alpha: (1..=k + 1).collect(),
                    value: v,
                });
            }
        }
        if v < -bound {
            near = false;
        }
    }
    if nonsingular {
        return MClass::MNonsingular;
    }
    // closure membership: A + εI must be nonsingular M at every probed ε
    let probes_pass = near
        && SINGULAR_PROBES
            .iter()
            .all(|&f| leading_minors(&a.shifted(f * s)).iter().all(|&v| v > 0.0));
    if probes_pass {
        MClass::MSingular
    } else {
        MClass::NotM
    }
}

/// Exhaustive P-test: every principal minor `> tol·s^{#α}`.
pub fn p_test(a: &Matrix, tol: f64, witnesses: &mut Vec<MinorWitness>) -> PTest {
    let n = a.order();
    if n > P_TEST_CAP {
        return PTest::NotEvaluated;
    }
    let s = scale_of(a);
    let mut ok = true;
    for k in 1..=n {
        let bound = tol * s.powi(k as i32);
        for mask in colex_masks(n, k) {
            let v = principal_minor_mask(a, mask);
            if v <= bound {
                ok = false;
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(MinorWitness {
                        alpha: IndexSet::from_mask(n, mask).elements().to_vec(),
                        value: v,
                    });
                }
            }
        }
    }
    if ok {
        PTest::Yes
    } else {
        PTest::No
    }
}

pub fn classify(a: &Matrix, tol: f64) -> MatrixClassReport {
    let mut witnesses = Vec::new();
    let zv = z_violations(a, tol);
    let m_class = m_class_of(a, tol, &mut witnesses);
    let is_p = p_test(a, tol, &mut witnesses);
    witnesses.sort_by(|x, y| x.alpha.len().cmp(&y.alpha.len()).then(x.alpha.cmp(&y.alpha)));
    witnesses.dedup_by(|x, y| x.alpha == y.alpha);
    let is_inverse_m = is_inverse_m(a, tol);
    MatrixClassReport {
        is_z: zv.is_empty(),
        is_p,
        m_class,
        is_inverse_m,
        witnesses,
        z_violations: zv,
    }
}

/// Nonsingular with an inverse that is a (nonsingular) M-matrix.
pub fn is_inverse_m(a: &Matrix, tol: f64) -> bool {
    let n = a.order();
    let s = scale_of(a);
    if a.determinant().abs() <= tol * s.powi(n as i32) {
        return false;
    }
    match a.inverse() {
        Ok(inv) => m_class_of(&inv, tol, &mut Vec::new()) == MClass::MNonsingular,
        Err(_) => false,
    }
}

/// Largest relative deviation of `A⁻¹[α]` from `A[α′] / det A` over all `α`.
///
/// Deviations are measured against `max(|lhs|, |rhs|, 1e-8 · M)` where `M`
/// is the largest such magnitude over all `α`, so minors that cancel to
/// near zero do not dominate.
pub fn dual_minor_deviation(a: &Matrix, tol: f64) -> Result<f64> {
    let n = a.order();
    if n > DUAL_CHECK_CAP {
        return Err(Error::CapExceeded {
            what: "dual minor identity order".into(),
            size: n as u128,
            cap: DUAL_CHECK_CAP as u128,
        });
    }
    let det = a.determinant();
    if det.abs() <= tol * scale_of(a).powi(n as i32) {
        return Err(Error::Singular { det });
    }
    let inv = a.inverse()?;
    let full = (1u64 << n) - 1;
    let pairs: Vec<(f64, f64)> = (0..=full)
        .map(|mask| {
            (
                principal_minor_mask(&inv, mask),
                principal_minor_mask(a, full & !mask) / det,
            )
        })
        .collect();
    let big = pairs
        .iter()
        .fold(0.0f64, |m, (x, y)| m.max(x.abs()).max(y.abs()));
    Ok(pairs.iter().fold(0.0f64, |worst, (x, y)| {
        let denom = x.abs().max(y.abs()).max(1e-8 * big);
        worst.max((x - y).abs() / denom)
    }))
}

/// `A⁻¹[α] = A[α′] / det A` for every `α`, to relative deviation `tol`.
pub fn dual_minor_identity_check(a: &Matrix, tol: f64) -> Result<bool> {
    Ok(dual_minor_deviation(a, tol)? <= tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorKind {
    #[serde(rename = "M")]
    M,
    #[serde(rename = "inverse-M")]
    InverseM,
    #[serde(rename = "singular-M")]
    SingularM,
    #[serde(rename = "similarity-conjugated-M")]
    SimilarityConjugatedM,
}

fn default_margin() -> f64 {
    0.1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    #[serde(default = "default_margin")]
    pub margin: f64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            kind,
            n,
            seed,
            margin: default_margin(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::input("n", "order must be at least 1"));
        }
        if !(self.margin > 0.0 && self.margin.is_finite()) {
            return Err(Error::input("margin", "margin must be a positive finite real"));
        }
        Ok(())
    }
}

const POWER_ITER_MAX: usize = 100_000;
const POWER_ITER_TOL: f64 = 1e-10;

fn uniform_nonnegative(n: usize, rng: &mut Xoshiro256PlusPlus) -> Matrix {
    Matrix::from_fn(n, |_, _| rng.random::<f64>())
}

/// Upper Collatz–Wielandt bound on the Perron root of a nonnegative matrix,
/// iterated until the bracket `[min_i (Bv)_i/v_i, max_i (Bv)_i/v_i]` is
/// relatively narrower than `1e-10`.
pub fn perron_root(b: &Matrix) -> Result<f64> {
    let n = b.order();
    let mut v = vec![1.0 / n as f64; n];
    for _ in 0..POWER_ITER_MAX {
        let w: Vec<f64> = (0..n)
            .map(|i| b.row(i).iter().zip(&v).map(|(x, y)| x * y).sum())
            .collect();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for (wi, vi) in w.iter().zip(&v) {
            let r = wi / vi;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi == 0.0 {
            return Ok(0.0);
        }
        if hi - lo <= POWER_ITER_TOL * hi {
            return Ok(hi);
        }
        let total: f64 = w.iter().sum();
        v = w.into_iter().map(|x| x / total).collect();
        if v.iter().any(|&x| x <= 0.0) {
            break;
        }
    }
    Err(Error::NoConvergence {
        what: "Perron power iteration".into(),
        iterations: POWER_ITER_MAX,
    })
}

/// Seeded matrix of the requested class. The same spec always yields the
/// same matrix.
pub fn generate(spec: &GeneratorSpec) -> Result<Matrix> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);
    let b = uniform_nonnegative(n, &mut rng);
    let max_row_sum = (0..n)
        .map(|i| b.row(i).iter().sum::<f64>())
        .fold(0.0f64, f64::max);
    let m = b.scaled(-1.0).shifted((1.0 + spec.margin) * max_row_sum);
    match spec.kind {
        GeneratorKind::M => Ok(m),
        GeneratorKind::InverseM => m.inverse(),
        GeneratorKind::SingularM => Ok(b.scaled(-1.0).shifted(perron_root(&b)?)),
        GeneratorKind::SimilarityConjugatedM => {
            // ‖T − I‖₂ ≤ ‖T − I‖_F ≤ 0.3, so cond(T) ≤ 1.3 / 0.7
            let h = 0.3 / n as f64;
            let t = Matrix::from_fn(n, |i, j| {
                let e = h * rng.random_range(-1.0..=1.0);
                if i == j {
                    1.0 + e
                } else {
                    e
                }
            });
            Ok(t.matmul(&m).matmul(&t.inverse()?))
        }
    }
}

/// Seeded matrix with independent entries uniform on `[lo, hi]`.
pub fn uniform_matrix(n: usize, seed: u64, lo: f64, hi: f64) -> Matrix {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    Matrix::from_fn(n, |_, _| rng.random_range(lo..=hi))
}
