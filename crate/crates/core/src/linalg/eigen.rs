use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Relative asymmetry accepted by [`sym_eigenvalues`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues of a real symmetric matrix in ascending order.
///
/// Backed by nalgebra's implicit symmetric QR iteration on the tridiagonal
/// reduction. The input is symmetrized before the solve.
pub fn sym_eigenvalues(s: &Matrix) -> Result<Vec<f64>> {
    let asym = s.asymmetry();
    if asym > SYMMETRY_TOL * s.max_abs() {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    let n = s.order();
    let dm = DMatrix::from_fn(n, n, |i, j| 0.5 * (s[(i, j)] + s[(j, i)]));
    let mut vals: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}
