use crate::error::{Error, Result};
use crate::linalg::subsets::colex_masks;
use crate::linalg::{principal_minor_mask, Matrix, RealPoly};

/// Largest order the exhaustive minor enumeration accepts without override.
pub const ENUMERATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorSumMethod {
    /// Faddeev–LeVerrier trace recursion, `O(n⁴)`.
    TraceRecursion,
    /// Sum of every principal minor, `O(2ⁿ n³)`. Oracle path.
    Enumeration,
}

/// `E_0..E_n`, where `E_j` is the sum of all `j × j` principal minors.
///
/// Uses the Faddeev–LeVerrier recursion: with `M_1 = I`,
/// `a_k = -tr(A M_k) / k` and `M_{k+1} = A M_k + a_k I`, the characteristic
/// polynomial is `Σ a_k x^{n-k}` and `E_k = (-1)^k a_k`.
pub fn minor_sums(a: &Matrix) -> Vec<f64> {
    let n = a.order();
    let mut sums = Vec::with_capacity(n + 1);
    sums.push(1.0);
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        let am = a.matmul(&m);
        let coeff = -am.trace() / k as f64;
        sums.push(if k % 2 == 0 { coeff } else { -coeff });
        m = am.shifted(coeff);
    }
    sums
}

pub fn minor_sums_with(a: &Matrix, method: MinorSumMethod, override_cap: bool) -> Result<Vec<f64>> {
    match method {
        MinorSumMethod::TraceRecursion => Ok(minor_sums(a)),
        MinorSumMethod::Enumeration => minor_sums_enumerated(a, override_cap),
    }
}

/// Oracle path: sums every principal minor, in colex order per size.
pub fn minor_sums_enumerated(a: &Matrix, override_cap: bool) -> Result<Vec<f64>> {
    let n = a.order();
    if n > ENUMERATION_CAP && !override_cap {
        return Err(Error::CapExceeded {
            what: "exhaustive minor enumeration order".into(),
            size: n as u128,
            cap: ENUMERATION_CAP as u128,
        });
    }
    if n > crate::linalg::subsets::MAX_AMBIENT {
        return Err(Error::input("n", "order too large for subset enumeration"));
    }
    Ok((0..=n)
        .map(|j| {
            colex_masks(n, j)
                .into_iter()
                .map(|mask| principal_minor_mask(a, mask))
                .sum()
        })
        .collect())
}

/// `det(xI - A)` as a polynomial in descending powers.
pub fn characteristic_polynomial(a: &Matrix) -> RealPoly {
    let coeffs = minor_sums(a)
        .into_iter()
        .enumerate()
        .map(|(k, e)| if k % 2 == 0 { e } else { -e })
        .collect();
    RealPoly::new(coeffs).expect("characteristic polynomial is monic and finite")
}
