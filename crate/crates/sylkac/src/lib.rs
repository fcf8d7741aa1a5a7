//! Exact spectral toolkit for the Sylvester-Kac matrix and the biogeography
//! migration matrix derived from it.
//!
//! The Sylvester-Kac matrix of order n+1 is tridiagonal with zero diagonal,
//! first superdiagonal 1, 2, ..., n and first subdiagonal n, n-1, ..., 1.
//! Its spectrum is the arithmetic progression -n, -n+2, ..., n. The
//! biogeography matrix is the affine relative (1/n) K - I, a Markov
//! generator whose spectrum is -2(n-k+1)/n for k = 1..n+1.
//!
//! Everything structural is computed in exact rational arithmetic
//! ([`Rational`]); characteristic polynomials come from four independent
//! routes that are checked against each other, eigenvectors carry exact
//! residual certificates, and a floating-point Sturm-bisection solver
//! ([`bisection_eigenvalues`]) provides a route that shares no code with
//! the closed forms.
//!
//! ```
//! use sylkac::{biogeography_eigenvalues, sylvester_kac, Rational};
//!
//! let k = sylvester_kac(3)?;
//! assert_eq!(k.superdiag(), [Rational::from(1), Rational::from(2), Rational::from(3)]);
//!
//! let spectrum = biogeography_eigenvalues(2)?;
//! let zero = spectrum.exact_values().unwrap().last().unwrap().clone();
//! assert!(zero.is_zero());
//! # Ok::<(), sylkac::Error>(())
//! ```

mod bench;
mod charpoly;
mod error;
mod matrix;
mod polynomial;
mod rational;
mod spectra;
mod verify;

pub use bench::{
    run_bench, BenchMethod, BenchOutcome, BenchRecord, BISECTION_MAX_N, EIGVEC_MAX_N,
    EXACT_CHARPOLY_MAX_N,
};
pub use charpoly::{
    biogeography_charpoly, build_biogeography_report, build_charpoly_report, charpoly_continuant,
    leibniz_det, sylvester_charpoly_product, sylvester_charpoly_proskuryakov,
    sylvester_charpoly_taussky_todd, CharpolyReport, LEIBNIZ_MAX_ORDER,
};
pub use error::{Error, Result};
pub use matrix::{biogeography_matrix, sylvester_kac, MatrixFamily, TridiagonalMatrix};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use spectra::{
    biogeography_eigenvalues, bisection_eigenvalues, exact_eigenvector, stationary_vector,
    sylvester_eigenvalues, symmetrize, Eigenpair, Spectrum, SpectrumSource, SpectrumValues,
    SymmetricTridiagonal,
};
pub use verify::{run_verification, CheckOutcome, VerifySummary};
