//! Dense real linear algebra and combinatorial kernels.

mod charpoly;
mod eigen;
mod matrix;
mod poly;
mod subsets;

pub use charpoly::{
    characteristic_polynomial, minor_sums, minor_sums_enumerated, minor_sums_with,
    MinorSumMethod, ENUMERATION_CAP,
};
pub use eigen::{sym_eigenvalues, SYMMETRY_TOL};
pub use matrix::{principal_minor, Matrix, PIVOT_EPS};
pub use poly::{coeffs_from_roots, poly_roots, RealPoly};
pub use subsets::{binomial_u128, enumerate_subsets, IndexSet, MAX_AMBIENT};

pub(crate) use matrix::principal_minor_mask;
pub(crate) use subsets::{binomial_signed, colex_masks};
