//! Numerical verification of Newton's inequalities for M- and inverse
//! M-matrices.
//!
//! The crate computes the normalized characteristic-polynomial coefficients
//! `c_j = E_j / C(n, j)` (where `E_j` is the sum of the `j × j` principal
//! minors), checks `c_j² ≥ c_{j-1} c_{j+1}`, evaluates the pair-sum functions
//! `S_{m1,m2,k}` over principal minors and the stronger inequalities between
//! them, builds the subset-indexed quadratic forms whose positive
//! semidefiniteness implies Newton's inequalities, and screens candidate
//! spectra against necessary conditions for realizability by an entrywise
//! nonnegative matrix.
//!
//! Modules:
//!
//! - [`linalg`]: dense matrices, index sets, principal minors, minor sums,
//!   symmetric eigenvalues and polynomial roots.
//! - [`mclass`]: Z/P/M/inverse-M classification and seeded generators.
//! - [`charcoeff`]: normalized coefficients and the Newton check.
//! - [`sfunc`]: `S_{m1,m2,k}`, identity counts and the inequalities between them.
//! - [`forms`]: the subset-indexed form matrices and the binomial identity.
//! - [`niep`]: moment, JLL, Newton-shift and Laffey–Meehan screening.
//! - [`io`]: the JSON file formats.

pub mod charcoeff;
pub mod error;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod mclass;
pub mod niep;
pub mod sfunc;
pub mod spectrum;

pub use error::{Error, Result};
pub use linalg::{IndexSet, Matrix, RealPoly};
pub use spectrum::Spectrum;
