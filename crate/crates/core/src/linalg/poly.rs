use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Real polynomial with coefficients in descending powers.
///
/// Leading zeros are stripped on construction, so the leading coefficient is
/// nonzero unless the polynomial is identically zero (stored as `[0.0]`).
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::input("coeffs", "at least one coefficient required"));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::input(format!("coeffs[{i}]"), "coefficient is not finite"));
        }
        let first = coeffs.iter().position(|&c| c != 0.0).unwrap_or(coeffs.len() - 1);
        Ok(RealPoly {
            coeffs: coeffs[first..].to_vec(),
        })
    }

    /// Monic polynomial with the given real roots.
    pub fn from_real_roots(roots: &[f64]) -> Self {
        let mut c = vec![1.0];
        for &r in roots {
            c.push(0.0);
            for i in (1..c.len()).rev() {
                c[i] -= r * c[i - 1];
            }
        }
        RealPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in &self.coeffs {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `Σ |c_i| |z|^{d-i}`: the magnitude scale of `p(z)` against which
    /// residuals are measured.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().fold(0.0, |acc, c| acc * r + c.abs())
    }
}

/// All complex roots of `p`, with multiplicity.
///
/// Trailing zero coefficients are split off as exact zero roots; the rest are
/// eigenvalues of the balanced companion matrix, refined by Newton steps that
/// are kept only when they reduce the residual. Conjugate pairs are returned
/// exactly conjugate. Roots are sorted by decreasing real part, then
/// decreasing imaginary part.
pub fn poly_roots(p: &RealPoly) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::input("coeffs", "zero polynomial has no finite root set"));
    }
    if p.degree() == 0 {
        return Err(Error::input("coeffs", "degree must be at least 1"));
    }
    let c = p.coeffs();
    let zeros = c.iter().rev().take_while(|&&x| x == 0.0).count();
    let reduced = RealPoly {
        coeffs: c[..c.len() - zeros].to_vec(),
    };
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let d = reduced.degree();
    if d > 0 {
        let lead = reduced.coeffs[0];
        let mut comp = DMatrix::<f64>::zeros(d, d);
        for j in 0..d {
            comp[(0, j)] = -reduced.coeffs[j + 1] / lead;
        }
        for i in 1..d {
            comp[(i, i - 1)] = 1.0;
        }
        balance(&mut comp);
        let eig = comp.complex_eigenvalues();
        let raw: Vec<Complex64> = eig.iter().copied().collect();
        roots.extend(refine_closed(&reduced, &raw));
    }
    roots.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(roots)
}

/// Newton-polishes the real roots and the upper-half-plane roots, then
/// regenerates the lower half by conjugation.
fn refine_closed(p: &RealPoly, raw: &[Complex64]) -> Vec<Complex64> {
    let upper: Vec<Complex64> = raw.iter().copied().filter(|z| z.im > 0.0).collect();
    let lower = raw.iter().filter(|z| z.im < 0.0).count();
    if upper.len() != lower {
        // eigensolver did not return exact pairs; keep its output
        return raw.iter().map(|&z| polish(p, z)).collect();
    }
    let mut out = Vec::with_capacity(raw.len());
    for &z in raw.iter().filter(|z| z.im == 0.0) {
        out.push(polish(p, z));
    }
    for &z in &upper {
        let w = polish(p, z);
        out.push(w);
        out.push(w.conj());
    }
    out
}

fn polish(p: &RealPoly, mut z: Complex64) -> Complex64 {
    let real = z.im == 0.0;
    let mut res = p.eval(z).norm();
    for _ in 0..4 {
        if res == 0.0 {
            break;
        }
        let (v, dv) = p.eval_with_derivative(z);
        if dv.norm() == 0.0 {
            break;
        }
        let mut next = z - v / dv;
        if real {
            next.im = 0.0;
        }
        let r = p.eval(next).norm();
        if r < res {
            z = next;
            res = r;
        } else {
            break;
        }
    }
    z
}

/// Parlett–Reinsch diagonal balancing with radix-2 scaling factors.
fn balance(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    let radix = 2.0f64;
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut cc = c;
            let rr = r;
            while cc < rr / radix {
                cc *= radix;
                f *= radix;
            }
            while cc >= rr * radix {
                cc /= radix;
                f /= radix;
            }
            if (c * f + r / f) < 0.95 * s {
                converged = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// Monic polynomial coefficients `Π (x - z_i)` from complex roots (Vieta),
/// descending powers.
pub fn coeffs_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        c.push(Complex64::new(0.0, 0.0));
        for i in (1..c.len()).rev() {
            let prev = c[i - 1];
            c[i] -= r * prev;
        }
    }
    c
}
