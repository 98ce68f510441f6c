//! Necessary conditions for a tuple `Λ` to be the spectrum of an entrywise
//! nonnegative matrix:
//!
//! - moments: `s_k = Σ λ_i^k ≥ 0`;
//! - JLL: `s_k^m ≤ n^{m−1} s_{km}`;
//! - Newton shift: with `λ_1` the Perron candidate, `(λ_1 − λ_i)_i` is the
//!   spectrum of an M-matrix and so satisfies Newton's inequalities;
//! - Laffey–Meehan: `(n−1) s_4 ≥ s_2²` whenever `s_1 = 0`.
//!
//! `moments` and `jll` are infinite families; they are checked for
//! `k ≤ moment_k` and `k·m ≤ jll_bound` respectively.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::charcoeff::{coeffs_from_spectrum, newton_check};
use crate::error::{Error, Result};
use crate::linalg::{poly_roots, RealPoly};
use crate::spectrum::PAIRING_TOL;

pub use crate::spectrum::Spectrum;

pub const DEFAULT_MOMENT_K: usize = 20;
pub const DEFAULT_JLL_BOUND: usize = 30;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// What produced the reported (worst) margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Moment { k: usize },
    Jll { k: usize, m: usize },
    NewtonIndex { j: usize },
    LaffeyMeehan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub status: Status,
    pub margin: Option<f64>,
    pub witness: Option<Witness>,
    /// Per-index detail: the moments `s_1..s_K`, or the Newton margins
    /// `μ_1..μ_{n−1}` of the shifted tuple.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<f64>,
    /// Exact integer margin, when the input is integral.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_margin: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ConditionResult {
    fn new(status: Status, margin: Option<f64>, witness: Option<Witness>) -> Self {
        ConditionResult {
            status,
            margin,
            witness,
            values: Vec::new(),
            exact_margin: None,
            note: None,
        }
    }

    fn not_applicable(note: impl Into<String>) -> Self {
        ConditionResult {
            note: Some(note.into()),
            ..ConditionResult::new(Status::NotApplicable, None, None)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Power sums `s_1..s_K` and the matching magnitudes `Σ |λ_i|^k`.
fn moments_with_scale(spectrum: &Spectrum, k_max: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if k_max == 0 {
        return Err(Error::input("moment-k", "K must be at least 1"));
    }
    spectrum.check_conjugate_closed(PAIRING_TOL)?;
    let vals = spectrum.values();
    let mut powers = vals.to_vec();
    let mut moduli: Vec<f64> = vals.iter().map(|z| z.norm()).collect();
    let mut sums = Vec::with_capacity(k_max);
    let mut scales = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        sums.push(powers.iter().fold(Complex64::new(0.0, 0.0), |acc, z| acc + z).re);
        scales.push(moduli.iter().sum());
        for (p, z) in powers.iter_mut().zip(vals) {
            *p *= z;
        }
        for (p, z) in moduli.iter_mut().zip(vals) {
            *p *= z.norm();
        }
    }
    Ok((sums, scales))
}

/// `s_1..s_K`, with the imaginary residue dropped after the closure check.
pub fn moments(spectrum: &Spectrum, k_max: usize) -> Result<Vec<f64>> {
    Ok(moments_with_scale(spectrum, k_max)?.0)
}

/// Pass iff `s_k ≥ −tol·Σ|λ_i|^k` for every `k ≤ K`. The margin is `min_k s_k`.
pub fn moment_condition(spectrum: &Spectrum, k_max: usize, tol: f64) -> Result<ConditionResult> {
    let (sums, scales) = moments_with_scale(spectrum, k_max)?;
    let mut pass = true;
    let mut worst = 0;
    for k in 0..sums.len() {
        if sums[k] < -tol * scales[k] {
            pass = false;
        }
        if sums[k] < sums[worst] {
            worst = k;
        }
    }
    let mut r = ConditionResult::new(
        if pass { Status::Pass } else { Status::Fail },
        Some(sums[worst]),
        Some(Witness::Moment { k: worst + 1 }),
    );
    r.values = sums;
    Ok(r)
}

/// `(n^{m−1} s_{km} − s_k^m) / max(|s_k^m|, n^{m−1}|s_{km}|)`, evaluated in
/// log-magnitude form so large powers cannot overflow. Zero when both sides
/// vanish.
fn jll_slack(n: usize, sk: f64, skm: f64, m: usize) -> f64 {
    let sign = |x: f64| if x < 0.0 { -1.0 } else { 1.0 };
    let lhs_sign = if m.is_multiple_of(2) { 1.0 } else { sign(sk) };
    let lhs_log = if sk == 0.0 { f64::NEG_INFINITY } else { m as f64 * sk.abs().ln() };
    let rhs_log = if skm == 0.0 {
        f64::NEG_INFINITY
    } else {
        (m - 1) as f64 * (n as f64).ln() + skm.abs().ln()
    };
    let top = lhs_log.max(rhs_log);
    if top == f64::NEG_INFINITY {
        return 0.0;
    }
    sign(skm) * (rhs_log - top).exp() - lhs_sign * (lhs_log - top).exp()
}

/// Pass iff the normalized slack of `s_k^m ≤ n^{m−1} s_{km}` is `≥ −tol` for
/// all `k ≥ 1`, `m ≥ 2` with `k·m ≤ bound`.
pub fn jll_condition(spectrum: &Spectrum, bound: usize, tol: f64) -> Result<ConditionResult> {
    if bound < 2 {
        return Err(Error::input("jll-bound", "bound must be at least 2"));
    }
    let s = moments(spectrum, bound)?;
    let n = spectrum.len();
    let mut worst: Option<(f64, usize, usize)> = None;
    for k in 1..=bound / 2 {
        for m in 2..=bound / k {
            let slack = jll_slack(n, s[k - 1], s[k * m - 1], m);
            if worst.is_none_or(|(w, _, _)| slack < w) {
                worst = Some((slack, k, m));
            }
        }
    }
    let (slack, k, m) = worst.expect("bound ≥ 2 yields at least (1, 2)");
    let mut r = ConditionResult::new(
        if slack >= -tol { Status::Pass } else { Status::Fail },
        Some(slack),
        Some(Witness::Jll { k, m }),
    );
    r.note = Some(format!("verified up to k·m ≤ {bound}"));
    Ok(r)
}

/// Index of the Perron candidate: a real nonnegative element of maximal
/// modulus (within `tol·scale`).
pub fn perron_candidate(spectrum: &Spectrum, tol: f64) -> Option<usize> {
    let eps = tol * spectrum.scale();
    let vals = spectrum.values();
    let top = vals.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    (0..vals.len())
        .filter(|&i| vals[i].norm() >= top - eps && vals[i].im.abs() <= eps && vals[i].re >= -eps)
        .max_by(|&a, &b| vals[a].re.total_cmp(&vals[b].re).then(b.cmp(&a)))
}

/// Newton's inequalities for `(λ_1 − λ_i)_i`.
pub fn newton_shift_condition(spectrum: &Spectrum, tol: f64) -> Result<ConditionResult> {
    spectrum.check_conjugate_closed(PAIRING_TOL)?;
    let Some(p) = perron_candidate(spectrum, tol) else {
        return Ok(ConditionResult::not_applicable(
            "no real nonnegative element of maximal modulus; not a Perron spectrum",
        ));
    };
    let lambda1 = Complex64::new(spectrum.values()[p].re, 0.0);
    let shifted = spectrum.reflected(lambda1);
    let report = newton_check(&coeffs_from_spectrum(&shifted)?, tol);
    let mut r = ConditionResult::new(
        if report.holds { Status::Pass } else { Status::Fail },
        report.min_margin(),
        report.worst_j.map(|j| Witness::NewtonIndex { j }),
    );
    r.values = report.margins;
    Ok(r)
}

fn integer_power_sums(values: &[i64], k_max: u32) -> Option<Vec<i128>> {
    (1..=k_max)
        .map(|k| {
            values.iter().try_fold(0i128, |acc, &v| {
                (v as i128).checked_pow(k).and_then(|p| acc.checked_add(p))
            })
        })
        .collect()
}

/// `(n−1) s_4 ≥ s_2²`, applicable when `|s_1| ≤ tol·Σ|λ_i|`. Integral inputs
/// are evaluated exactly.
pub fn laffey_meehan_condition(spectrum: &Spectrum, tol: f64) -> Result<ConditionResult> {
    let n = spectrum.len();
    if let Some(exact) = spectrum
        .as_integers()
        .and_then(|v| integer_power_sums(&v, 4))
    {
        if exact[0] != 0 {
            return Ok(ConditionResult::not_applicable(format!("s_1 = {} ≠ 0", exact[0])));
        }
        let margin = (n as i128 - 1) * exact[3] - exact[1] * exact[1];
        let mut r = ConditionResult::new(
            if margin >= 0 { Status::Pass } else { Status::Fail },
            Some(margin as f64),
            Some(Witness::LaffeyMeehan),
        );
        r.exact_margin = Some(margin);
        return Ok(r);
    }
    let (s, scale) = moments_with_scale(spectrum, 4)?;
    if s[0].abs() > tol * scale[0] {
        return Ok(ConditionResult::not_applicable(format!("s_1 = {:e} ≠ 0", s[0])));
    }
    let lhs = (n - 1) as f64 * s[3];
    let rhs = s[1] * s[1];
    let margin = lhs - rhs;
    let pass = margin >= -tol * lhs.abs().max(rhs);
    Ok(ConditionResult::new(
        if pass { Status::Pass } else { Status::Fail },
        Some(margin),
        Some(Witness::LaffeyMeehan),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScreenParams {
    pub moment_k: usize,
    pub jll_bound: usize,
    pub tol: f64,
}

impl Default for ScreenParams {
    fn default() -> Self {
        ScreenParams {
            moment_k: DEFAULT_MOMENT_K,
            jll_bound: DEFAULT_JLL_BOUND,
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScreeningReport {
    pub n: usize,
    pub params: ScreenParams,
    pub moments: ConditionResult,
    pub jll: ConditionResult,
    pub newton_shift: ConditionResult,
    pub laffey_meehan: ConditionResult,
}

impl ScreeningReport {
    pub fn conditions(&self) -> [(&'static str, &ConditionResult); 4] {
        [
            ("moments", &self.moments),
            ("jll", &self.jll),
            ("newton_shift", &self.newton_shift),
            ("laffey_meehan", &self.laffey_meehan),
        ]
    }

    /// No condition failed (not-applicable counts as passing).
    pub fn all_pass(&self) -> bool {
        self.conditions().iter().all(|(_, c)| !c.failed())
    }
}

pub fn screen(spectrum: &Spectrum, params: &ScreenParams) -> Result<ScreeningReport> {
    if !(params.tol > 0.0) {
        return Err(Error::input("tol", "tolerance must be positive"));
    }
    Ok(ScreeningReport {
        n: spectrum.len(),
        params: *params,
        moments: moment_condition(spectrum, params.moment_k, params.tol)?,
        jll: jll_condition(spectrum, params.jll_bound, params.tol)?,
        newton_shift: newton_shift_condition(spectrum, params.tol)?,
        laffey_meehan: laffey_meehan_condition(spectrum, params.tol)?,
    })
}

/// Linearized perturbation direction: `9·t1 + t2 + 4·t3 = 0`, `t1 + t2 + t3 > 0`.
pub const PERTURBATION_DIRECTION: [f64; 3] = [-1.0, 13.0, -1.0];

const CUBE_TARGET: f64 = 20.0;
const CUBE_RESIDUAL: f64 = 1e-13;
const CUBE_MAX_ITER: usize = 100;

/// `Λ_t = (3+t1, 1+t2, 1, 1, 1, 1, −2+t3, −2, −2, −2)` with `(t1, t2, t3)`
/// starting at `ε·(−1, 13, −1)` and `t3` then corrected by Newton's method
/// so that `(3+t1)³ + (1+t2)³ + (−2+t3)³ = 20`. The third moment stays zero
/// while the first becomes positive.
pub fn construct_perturbed(eps: f64) -> Result<Spectrum> {
    if !(eps > 0.0 && eps <= 1e-2) {
        return Err(Error::input("epsilon", "need 0 < ε ≤ 1e-2"));
    }
    let [d1, d2, d3] = PERTURBATION_DIRECTION;
    let (t1, t2) = (eps * d1, eps * d2);
    let fixed = (3.0 + t1).powi(3) + (1.0 + t2).powi(3);
    let residual = |t3: f64| fixed + (-2.0 + t3).powi(3) - CUBE_TARGET;
    let mut t3 = eps * d3;
    let mut converged = false;
    for _ in 0..CUBE_MAX_ITER {
        let g = residual(t3);
        if g.abs() <= CUBE_RESIDUAL {
            converged = true;
            break;
        }
        let step = g / (3.0 * (-2.0 + t3).powi(2));
        t3 -= step;
        if step == 0.0 {
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "perturbed 10-tuple cube correction".into(),
            iterations: CUBE_MAX_ITER,
        });
    }
    Spectrum::from_real(&[
        3.0 + t1,
        1.0 + t2,
        1.0,
        1.0,
        1.0,
        1.0,
        -2.0 + t3,
        -2.0,
        -2.0,
        -2.0,
    ])
}

/// Reference tuples separating the four conditions.
pub mod witnesses {
    use super::*;

    /// `(1, −1, −1)`: moments fail, Newton shift passes.
    pub fn moments_fail_triple() -> Spectrum {
        Spectrum::from_real(&[1.0, -1.0, -1.0]).expect("finite")
    }

    /// `(√2, i, −i)`: moments pass, Newton shift fails.
    pub fn newton_fail_triple() -> Spectrum {
        Spectrum::new(vec![
            Complex64::new(2f64.sqrt(), 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
        ])
        .expect("finite")
    }

    /// `(3, 1, 1, 1, 1, 1, −2, −2, −2, −2)`: first and third moments vanish.
    pub fn ten_tuple() -> Spectrum {
        Spectrum::from_real(&[3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0])
            .expect("finite")
    }

    /// `(3, 3, −2, −2, −2)`: fails only Laffey–Meehan.
    pub fn five_tuple() -> Spectrum {
        Spectrum::from_real(&[3.0, 3.0, -2.0, -2.0, -2.0]).expect("finite")
    }

    /// `x⁶ − 6x⁵ + 14x⁴ − 20x³`: `(x − 1)⁶` truncated, with the `x⁴`
    /// coefficient lowered from 15 to 14.
    pub fn cut_sextic() -> RealPoly {
        RealPoly::new(vec![1.0, -6.0, 14.0, -20.0, 0.0, 0.0, 0.0]).expect("finite")
    }

    /// `(a, a, a, 0, b, b̄)`: the roots `r_i` of [`cut_sextic`] reflected
    /// through the largest one, `a − r_i`. Passes moments and JLL, fails the
    /// Newton shift at `j = 2`.
    pub fn sextic_tuple() -> Spectrum {
        let roots = poly_roots(&cut_sextic()).expect("degree 6");
        let a = roots
            .iter()
            .copied()
            .max_by(|x, y| x.norm().total_cmp(&y.norm()))
            .expect("six roots");
        let a = Complex64::new(a.re, 0.0);
        let mut vals: Vec<Complex64> = roots.iter().map(|&r| a - r).collect();
        // (a, a, a, 0, b, b̄)
        vals.sort_by(|x, y| {
            let key = |z: &Complex64| (z.im != 0.0, -z.re, -z.im);
            let (kx, ky) = (key(x), key(y));
            kx.0.cmp(&ky.0)
                .then(kx.1.total_cmp(&ky.1))
                .then(kx.2.total_cmp(&ky.2))
        });
        Spectrum::new(vals).expect("finite")
    }
}

#[cfg(test)]
mod tests {
    use super::witnesses::*;
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn moment_examples() {
        // 1 − 1 − 1 = −1 for the cubes
        close(&moments(&moments_fail_triple(), 3).unwrap(), &[-1.0, 3.0, -1.0], 1e-15);
        let r2 = 2f64.sqrt();
        close(
            &moments(&newton_fail_triple(), 4).unwrap(),
            &[r2, 0.0, 2.0 * r2, 6.0],
            1e-14,
        );
        close(&moments(&ten_tuple(), 4).unwrap(), &[0.0, 30.0, 0.0, 150.0], 0.0);
        assert!(moments(&ten_tuple(), 0).is_err());
        let open = Spectrum::new(vec![Complex64::new(0.0, 1.0)]).unwrap();
        assert!(moments(&open, 2).is_err());
    }

    #[test]
    fn moment_condition_examples() {
        let r = moment_condition(&moments_fail_triple(), 20, DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.margin, Some(-1.0));
        assert_eq!(r.witness, Some(Witness::Moment { k: 1 }));
        let r = moment_condition(&Spectrum::from_real(&[0.0, 2.0, 2.0]).unwrap(), 20, 1e-9);
        assert!(r.unwrap().passed());
        assert!(moment_condition(&newton_fail_triple(), 20, 1e-9).unwrap().passed());
    }

    #[test]
    fn jll_examples() {
        let one = Spectrum::from_real(&[2.5]).unwrap();
        let r = jll_condition(&one, 30, DEFAULT_TOL).unwrap();
        assert!(r.passed());
        assert!(r.margin.unwrap().abs() < 1e-12);

        let r = jll_condition(&construct_perturbed(1e-3).unwrap(), 30, DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness, Some(Witness::Jll { k: 1, m: 3 }));

        assert!(jll_condition(&sextic_tuple(), 30, DEFAULT_TOL).unwrap().passed());
        assert!(jll_condition(&one, 1, DEFAULT_TOL).is_err());
    }

    #[test]
    fn jll_slack_handles_huge_powers() {
        let s = jll_slack(10, 1e200, 1e250, 3);
        assert!(s.is_finite());
        assert_eq!(jll_slack(3, 0.0, 0.0, 2), 0.0);
        // s_1 = 2, s_2 = 2, n = 2: 4 ≤ 4 with equality
        assert!(jll_slack(2, 2.0, 2.0, 2).abs() < 1e-15);
        // odd power of a negative moment is trivially below
        assert!(jll_slack(2, -1.0, 0.0, 3) > 0.0);
    }

    #[test]
    fn newton_shift_examples() {
        let r = newton_shift_condition(&moments_fail_triple(), DEFAULT_TOL).unwrap();
        assert!(r.passed());
        close(&r.values, &[4.0 / 9.0, 16.0 / 9.0], 1e-15);

        let r = newton_shift_condition(&newton_fail_triple(), DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness, Some(Witness::NewtonIndex { j: 1 }));
        assert!((r.margin.unwrap() + 1.0 / 9.0).abs() < 1e-12);

        let r = newton_shift_condition(&sextic_tuple(), DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness, Some(Witness::NewtonIndex { j: 2 }));
        assert!((r.margin.unwrap() + 29.0 / 225.0).abs() < 1e-9);
    }

    #[test]
    fn newton_shift_not_applicable_without_perron_element() {
        let s = Spectrum::from_real(&[-3.0, 1.0]).unwrap();
        let r = newton_shift_condition(&s, DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
        assert!(r.note.is_some());
        let s = Spectrum::new(vec![Complex64::new(0.0, 2.0), Complex64::new(0.0, -2.0)]).unwrap();
        assert_eq!(
            newton_shift_condition(&s, DEFAULT_TOL).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn laffey_meehan_examples() {
        let r = laffey_meehan_condition(&five_tuple(), DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exact_margin, Some(-60));
        let r = laffey_meehan_condition(&ten_tuple(), DEFAULT_TOL).unwrap();
        assert!(r.passed());
        assert_eq!(r.exact_margin, Some(450));
        let r = laffey_meehan_condition(&Spectrum::from_real(&[0.0; 3]).unwrap(), 1e-9).unwrap();
        assert_eq!((r.status, r.exact_margin), (Status::Pass, Some(0)));
        let r = laffey_meehan_condition(&moments_fail_triple(), DEFAULT_TOL).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
        // non-integral, s_1 = 0
        let s = Spectrum::from_real(&[1.5, -0.5, -0.5, -0.5]).unwrap();
        let r = laffey_meehan_condition(&s, DEFAULT_TOL).unwrap();
        assert!(r.exact_margin.is_none());
        assert!((r.margin.unwrap() - (3.0 * 5.25 - 9.0)).abs() < 1e-12);
    }

    #[test]
    fn screening_examples() {
        let p = ScreenParams::default();
        let r = screen(&moments_fail_triple(), &p).unwrap();
        assert!(r.moments.failed() && r.newton_shift.passed());
        let r = screen(&newton_fail_triple(), &p).unwrap();
        assert!(r.moments.passed() && r.newton_shift.failed());
        let r = screen(&sextic_tuple(), &p).unwrap();
        assert!(r.moments.passed() && r.jll.passed() && r.newton_shift.failed());
        assert!(!r.all_pass());
        let bad = ScreenParams { tol: 0.0, ..p };
        assert!(screen(&ten_tuple(), &bad).is_err());
    }

    #[test]
    fn perturbed_tuple() {
        let s = construct_perturbed(1e-3).unwrap();
        let m = moments(&s, 20).unwrap();
        assert!(m[0] > 0.0);
        assert!(m[2].abs() <= 1e-12);
        let v: Vec<f64> = s.values().iter().map(|z| z.re).collect();
        let cubes = v[0].powi(3) + v[1].powi(3) + v[6].powi(3);
        assert!((cubes - 20.0).abs() <= 1e-13);
        assert!(construct_perturbed(0.0).is_err());
        assert!(construct_perturbed(0.5).is_err());
    }

    #[test]
    fn perturbed_tuple_tends_to_unperturbed() {
        let base = ten_tuple();
        let s = construct_perturbed(1e-9).unwrap();
        for (a, b) in s.values().iter().zip(base.values()) {
            assert!((a - b).norm() < 1e-7);
        }
    }

    #[test]
    fn sextic_tuple_shape() {
        let s = sextic_tuple();
        let v = s.values();
        assert_eq!(v.len(), 6);
        assert!(v[0] == v[1] && v[1] == v[2]);
        assert!((v[0].re - 3.6702).abs() < 5e-4);
        assert_eq!(v[3].re.abs(), 0.0);
        assert!((v[4].re - 2.5054).abs() < 5e-4 && (v[4].im - 2.0229).abs() < 5e-4);
        assert_eq!(v[5], v[4].conj());
    }
}
