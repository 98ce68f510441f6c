//! Candidate spectra: finite multisets of complex numbers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for conjugate pairing.
pub const PAIRING_TOL: f64 = 1e-9;

/// `Λ = (λ_1, …, λ_n)`. Order is preserved as given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::input("values", "spectrum must be nonempty"));
        }
        if let Some(i) = values.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::input(format!("values[{i}]"), "value is not finite"));
        }
        Ok(Spectrum { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Spectrum::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `max(1, max_i |λ_i|)`.
    pub fn scale(&self) -> f64 {
        self.values.iter().fold(1.0f64, |m, z| m.max(z.norm()))
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|z| z.im == 0.0)
    }

    /// Values as integers when every value is an exact integer with zero
    /// imaginary part.
    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|z| {
                (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 2f64.powi(53))
                    .then_some(z.re as i64)
            })
            .collect()
    }

    /// Checks closure under complex conjugation.
    ///
    /// Values with `|Im λ| ≤ tol·scale` pair with themselves; every other value
    /// is paired greedily, in input order, with the nearest unpaired value to
    /// its conjugate, which must lie within `tol·scale`.
    pub fn check_conjugate_closed(&self, tol: f64) -> Result<()> {
        let eps = tol * self.scale();
        let n = self.values.len();
        let mut paired = vec![false; n];
        for i in 0..n {
            if paired[i] {
                continue;
            }
            let z = self.values[i];
            if z.im.abs() <= eps {
                paired[i] = true;
                continue;
            }
            let target = z.conj();
            let best = (0..n)
                .filter(|&j| j != i && !paired[j] && self.values[j].im.abs() > eps)
                .min_by(|&a, &b| {
                    (self.values[a] - target)
                        .norm()
                        .total_cmp(&(self.values[b] - target).norm())
                });
            match best {
                Some(j) if (self.values[j] - target).norm() <= eps => {
                    paired[i] = true;
                    paired[j] = true;
                }
                _ => {
                    return Err(Error::input(
                        format!("values[{i}]"),
                        format!("{z} has no conjugate partner within {eps:e}"),
                    ))
                }
            }
        }
        Ok(())
    }

    /// `Λ` shifted and reflected: `(c − λ_1, …, c − λ_n)`.
    pub fn reflected(&self, c: Complex64) -> Spectrum {
        Spectrum {
            values: self.values.iter().map(|&z| c - z).collect(),
        }
    }
}
