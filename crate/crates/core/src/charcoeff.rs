//! Normalized characteristic-polynomial coefficients and Newton's inequalities.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{binomial_u128, minor_sums, Matrix};
use crate::spectrum::{Spectrum, PAIRING_TOL};

/// Default relative tolerance for [`newton_check`].
pub const NEWTON_TOL: f64 = 1e-9;
/// Floor applied to any caller tolerance.
pub const NEWTON_TOL_FLOOR: f64 = 1e-12;

/// `c_0..c_n` with `c_j = E_j / C(n, j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffVector {
    pub n: usize,
    pub c: Vec<f64>,
}

impl CoeffVector {
    /// Normalizes un-normalized sums `E_0..E_n`.
    pub fn from_sums(sums: &[f64]) -> Self {
        let n = sums.len() - 1;
        let c = sums
            .iter()
            .enumerate()
            .map(|(j, e)| e / binomial_u128(n as u64, j as u64) as f64)
            .collect();
        CoeffVector { n, c }
    }
}

pub fn normalized_coeffs(a: &Matrix) -> CoeffVector {
    CoeffVector::from_sums(&minor_sums(a))
}

/// Elementary symmetric functions `e_0..e_n` of a spectrum, by adding one
/// root at a time: `e_j ← e_j + λ e_{j-1}`.
pub fn elementary_symmetric(values: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); values.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (k, &z) in values.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            let prev = e[j - 1];
            e[j] += z * prev;
        }
    }
    e
}

/// Normalized coefficients from eigenvalues. The spectrum must be closed
/// under conjugation; the imaginary residue of each `e_j` must not exceed
/// `1e-9 · C(n,j) · scale^j` and is then dropped.
pub fn coeffs_from_spectrum(spectrum: &Spectrum) -> Result<CoeffVector> {
    spectrum.check_conjugate_closed(PAIRING_TOL)?;
    let n = spectrum.len();
    let s = spectrum.scale();
    let e = elementary_symmetric(spectrum.values());
    let mut sums = Vec::with_capacity(n + 1);
    for (j, ej) in e.iter().enumerate() {
        let bound = PAIRING_TOL * binomial_u128(n as u64, j as u64) as f64 * s.powi(j as i32);
        if ej.im.abs() > bound {
            return Err(Error::input(
                "values",
                format!("e_{j} has imaginary part {:e}", ej.im),
            ));
        }
        sums.push(ej.re);
    }
    Ok(CoeffVector::from_sums(&sums))
}

/// Margins `μ_j = c_j² − c_{j-1} c_{j+1}`, `j = 1..n-1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewtonReport {
    /// `margins[i]` is `μ_{i+1}`.
    pub margins: Vec<f64>,
    pub holds: bool,
    /// Index `j` with the smallest `μ_j / max(1, c_j²)`; `None` when `n < 2`.
    pub worst_j: Option<usize>,
    pub tol: f64,
}

impl NewtonReport {
    pub fn margin(&self, j: usize) -> f64 {
        self.margins[j - 1]
    }

    pub fn min_margin(&self) -> Option<f64> {
        self.worst_j.map(|j| self.margin(j))
    }
}

/// Holds iff `μ_j ≥ −tol·max(1, c_j²)` for every `j`, with `tol` floored at
/// `1e-12`.
pub fn newton_check(c: &CoeffVector, tol: f64) -> NewtonReport {
    let tol = tol.max(NEWTON_TOL_FLOOR);
    let mut margins = Vec::new();
    let mut holds = true;
    let mut worst: Option<(usize, f64)> = None;
    for j in 1..c.n {
        let cj2 = c.c[j] * c.c[j];
        let mu = cj2 - c.c[j - 1] * c.c[j + 1];
        let rel = mu / cj2.max(1.0);
        if rel < -tol {
            holds = false;
        }
        if worst.is_none_or(|(_, w)| rel < w) {
            worst = Some((j, rel));
        }
        margins.push(mu);
    }
    NewtonReport {
        margins,
        holds,
        worst_j: worst.map(|(j, _)| j),
        tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol * y.abs().max(1.0), "{a:?} vs {b:?}");
        }
    }

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matrix_examples() {
        close(&normalized_coeffs(&Matrix::identity(5)).c, &[1.0; 6], 1e-14);
        close(
            &normalized_coeffs(&Matrix::diag(&[1.0, 2.0, 3.0])).c,
            &[1.0, 2.0, 11.0 / 3.0, 6.0],
            1e-14,
        );
        let a = Matrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]).unwrap();
        close(&normalized_coeffs(&a).c, &[1.0, 2.0, 3.0], 1e-14);
    }

    #[test]
    fn spectrum_examples() {
        let c = coeffs_from_spectrum(&Spectrum::from_real(&[0.0, 2.0, 2.0]).unwrap()).unwrap();
        close(&c.c, &[1.0, 4.0 / 3.0, 4.0 / 3.0, 0.0], 1e-15);

        let r2 = 2f64.sqrt();
        let s = Spectrum::new(vec![cx(0.0, 0.0), cx(r2, -1.0), cx(r2, 1.0)]).unwrap();
        let c = coeffs_from_spectrum(&s).unwrap();
        close(&c.c, &[1.0, 2.0 * r2 / 3.0, 1.0, 0.0], 1e-15);

        let ones = coeffs_from_spectrum(&Spectrum::from_real(&[1.0; 7]).unwrap()).unwrap();
        close(&ones.c, &[1.0; 8], 1e-15);
    }

    #[test]
    fn spectrum_not_closed() {
        let s = Spectrum::new(vec![cx(1.0, 1.0), cx(2.0, 0.0)]).unwrap();
        assert!(matches!(
            coeffs_from_spectrum(&s),
            Err(Error::InvalidInput { .. })
        ));
    }

    #[test]
    fn newton_examples() {
        let c = coeffs_from_spectrum(&Spectrum::from_real(&[0.0, 2.0, 2.0]).unwrap()).unwrap();
        let r = newton_check(&c, NEWTON_TOL);
        assert!(r.holds);
        close(&r.margins, &[4.0 / 9.0, 16.0 / 9.0], 1e-15);

        let r2 = 2f64.sqrt();
        let s = Spectrum::new(vec![cx(0.0, 0.0), cx(r2, -1.0), cx(r2, 1.0)]).unwrap();
        let r = newton_check(&coeffs_from_spectrum(&s).unwrap(), NEWTON_TOL);
        assert!(!r.holds);
        assert_eq!(r.worst_j, Some(1));
        assert!((r.margin(1) + 1.0 / 9.0).abs() < 1e-15);

        let r = newton_check(&normalized_coeffs(&Matrix::identity(6)), NEWTON_TOL);
        assert!(r.holds);
        assert!(r.margins.iter().all(|m| m.abs() < 1e-14));
    }

    #[test]
    fn order_one_has_no_margins() {
        let r = newton_check(&normalized_coeffs(&Matrix::diag(&[-4.0])), NEWTON_TOL);
        assert!(r.holds && r.margins.is_empty() && r.worst_j.is_none());
    }

    #[test]
    fn tolerance_is_floored() {
        let c = CoeffVector {
            n: 2,
            c: vec![1.0, 1.0, 1.0 + 1e-13],
        };
        assert!(newton_check(&c, 0.0).holds);
        let c = CoeffVector {
            n: 2,
            c: vec![1.0, 1.0, 1.0 + 1e-11],
        };
        assert!(!newton_check(&c, 0.0).holds);
    }
}
