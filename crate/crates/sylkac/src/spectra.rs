//! Spectra of the two matrix families: closed-form eigenvalues, exact
//! eigenvector certificates, the stationary vector of the biogeography
//! generator, and an independent Sturm-bisection eigensolver.
//!
//! The closed forms come from the factored characteristic polynomial; the
//! bisection solver never touches exact arithmetic, so the two routes can
//! vouch for each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{biogeography_matrix, MatrixFamily, TridiagonalMatrix};
use crate::rational::Rational;

/// How a [`Spectrum`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    ClosedForm,
    Bisection,
}

/// Eigenvalues in ascending order; exact for closed forms, binary64 for
/// the bisection route.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpectrumValues {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

/// The full eigenvalue list of one matrix of order n+1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub n: u32,
    pub source: SpectrumSource,
    pub values: SpectrumValues,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        match &self.values {
            SpectrumValues::Exact(v) => v.len(),
            SpectrumValues::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact_values(&self) -> Option<&[Rational]> {
        match &self.values {
            SpectrumValues::Exact(v) => Some(v),
            SpectrumValues::Float(_) => None,
        }
    }

    pub fn float_values(&self) -> Option<&[f64]> {
        match &self.values {
            SpectrumValues::Float(v) => Some(v),
            SpectrumValues::Exact(_) => None,
        }
    }

    /// Every eigenvalue as binary64, rounding exact values.
    pub fn to_f64_values(&self) -> Vec<f64> {
        match &self.values {
            SpectrumValues::Exact(v) => v.iter().map(Rational::to_f64).collect(),
            SpectrumValues::Float(v) => v.clone(),
        }
    }
}

/// Closed-form eigenvalues of the Sylvester-Kac matrix of order n+1:
/// the integers -n, -n+2, ..., n.
pub fn sylvester_eigenvalues(n: u32) -> Result<Spectrum> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let values = (0..=n as i64)
        .map(|j| Rational::from(-(n as i64) + 2 * j))
        .collect();
    Ok(Spectrum {
        n,
        source: SpectrumSource::ClosedForm,
        values: SpectrumValues::Exact(values),
    })
}

/// Closed-form eigenvalues of the biogeography matrix of order n+1:
/// -2(n-k+1)/n for k = 1..n+1, ascending from -2 to 0 in steps of 2/n.
pub fn biogeography_eigenvalues(n: u32) -> Result<Spectrum> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let values = (1..=n as i64 + 1)
        .map(|k| Rational::new(-2 * (n as i64 - k + 1), n as i64).expect("n >= 1"))
        .collect();
    Ok(Spectrum {
        n,
        source: SpectrumSource::ClosedForm,
        values: SpectrumValues::Exact(values),
    })
}

impl MatrixFamily {
    /// The family's closed-form spectrum at parameter n.
    pub fn closed_form_spectrum(self, n: u32) -> Result<Spectrum> {
        match self {
            MatrixFamily::SylvesterKac => sylvester_eigenvalues(n),
            MatrixFamily::Biogeography => biogeography_eigenvalues(n),
        }
    }
}

/// An exact eigenvector candidate together with its certificate outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub value: Rational,
    pub vector: Vec<Rational>,
    pub residual_is_zero: bool,
}

/// Solves the tridiagonal recurrence for an eigenvector of `m` at `lambda`,
/// normalized to a leading 1, and checks the final row exactly.
///
/// `residual_is_zero = false` means `lambda` is not an eigenvalue; that is
/// the certificate outcome, not an error. Every superdiagonal entry must be
/// nonzero for the forward recurrence to advance.
pub fn exact_eigenvector(m: &TridiagonalMatrix, lambda: &Rational) -> Result<Eigenpair> {
    if let Some(index) = m.superdiag().iter().position(Rational::is_zero) {
        return Err(Error::ZeroSuperdiagonal { index });
    }
    let order = m.order();
    let mut vector = Vec::with_capacity(order);
    vector.push(Rational::one());
    for k in 0..order - 1 {
        // row k: sub_{k-1} v_{k-1} + (d_k - lambda) v_k + super_k v_{k+1} = 0
        let mut acc = &(&m.diag()[k] - lambda) * &vector[k];
        if k > 0 {
            acc += &(&m.subdiag()[k - 1] * &vector[k - 1]);
        }
        vector.push(-acc / &m.superdiag()[k]);
    }
    let mut residual = &(&m.diag()[order - 1] - lambda) * &vector[order - 1];
    if order > 1 {
        residual += &(&m.subdiag()[order - 2] * &vector[order - 2]);
    }
    Ok(Eigenpair {
        value: lambda.clone(),
        vector,
        residual_is_zero: residual.is_zero(),
    })
}

/// The exact stationary vector of the biogeography generator: the null
/// vector of A_{n+1}, normalized to sum 1.
///
/// Solved by banded Gaussian elimination: forward elimination of the
/// subdiagonal leaves an upper bidiagonal system whose last pivot vanishes
/// (A is singular); the free variable is back-substituted.
pub fn stationary_vector(n: u32) -> Result<Vec<Rational>> {
    let a = biogeography_matrix(n)?;
    let order = a.order();
    let mut diag = a.diag().to_vec();
    let superdiag = a.superdiag();

    for row in 0..order - 1 {
        if diag[row].is_zero() {
            return Err(Error::ZeroPivot { row });
        }
        let factor = &a.subdiag()[row] / &diag[row];
        let update = &factor * &superdiag[row];
        diag[row + 1] -= &update;
    }
    assert!(
        diag[order - 1].is_zero(),
        "generator matrix must be singular"
    );

    let mut vector = vec![Rational::zero(); order];
    vector[order - 1] = Rational::one();
    for row in (0..order - 1).rev() {
        vector[row] = -(&superdiag[row] * &vector[row + 1]) / &diag[row];
    }

    let total: Rational = vector.iter().sum();
    Ok(vector.into_iter().map(|v| v / &total).collect())
}

/// A symmetric tridiagonal matrix in binary64, as produced by [`symmetrize`].
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymmetricTridiagonal {
    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }
}

/// Diagonal similarity transform onto a symmetric tridiagonal matrix with
/// the same spectrum: keeps the diagonal, replaces each off-diagonal pair
/// by sqrt(super * sub). Requires every product to be positive.
pub fn symmetrize(m: &TridiagonalMatrix) -> Result<SymmetricTridiagonal> {
    let mut off = Vec::with_capacity(m.order() - 1);
    for (index, (s, t)) in m.superdiag().iter().zip(m.subdiag()).enumerate() {
        let product = s * t;
        if !product.is_positive() {
            return Err(Error::NotSymmetrizable { index });
        }
        off.push(product.to_f64().sqrt());
    }
    Ok(SymmetricTridiagonal {
        diag: m.diag().iter().map(Rational::to_f64).collect(),
        off,
    })
}

/// A usable bisection tolerance is positive and finite.
pub(crate) fn validate_tolerance(tol: f64) -> Result<()> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(Error::InvalidTolerance(tol));
    }
    Ok(())
}

// Stand-in for an exactly zero LDL^T pivot; small enough that e^2 / PIVOT_MIN
// stays finite for the matrix scales in scope.
const PIVOT_MIN: f64 = 1e-300;

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly less
/// than `x`, counted as negative pivots of the LDL^T factorization of T - xI.
fn count_below(sym: &SymmetricTridiagonal, x: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0f64;
    for i in 0..sym.diag.len() {
        let off_sq = if i == 0 {
            0.0
        } else {
            sym.off[i - 1] * sym.off[i - 1]
        };
        pivot = (sym.diag[i] - x) - off_sq / pivot;
        if pivot.abs() < PIVOT_MIN {
            pivot = -PIVOT_MIN;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

// Hard cap on bisection steps per eigenvalue; 2^-200 contraction is
// unreachable in binary64, so this only guards nontermination bugs.
const MAX_BISECTION_STEPS: usize = 200;

/// All eigenvalues of `m` by Sturm-count bisection on the symmetrized
/// matrix, each bracketed to width <= tol * max(1, |midpoint|). The initial
/// bracket is the Gershgorin bound. Ascending; `source = bisection`.
pub fn bisection_eigenvalues(m: &TridiagonalMatrix, tol: f64) -> Result<Spectrum> {
    validate_tolerance(tol)?;
    let sym = symmetrize(m)?;
    let order = sym.order();

    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..order {
        let left = if i > 0 { sym.off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < order { sym.off[i].abs() } else { 0.0 };
        lo = lo.min(sym.diag[i] - left - right);
        hi = hi.max(sym.diag[i] + left + right);
    }
    lo -= 1.0;
    hi += 1.0;

    let values = (0..order)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..MAX_BISECTION_STEPS {
                let mid = 0.5 * (a + b);
                // refine 4x past the promised width so the returned midpoint
                // sits well inside the tol * max(1, |lambda|) guarantee
                if b - a <= 0.25 * tol * mid.abs().max(1.0) {
                    break;
                }
                if count_below(&sym, mid) <= k {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect();

    Ok(Spectrum {
        n: (order - 1) as u32,
        source: SpectrumSource::Bisection,
        values: SpectrumValues::Float(values),
    })
}
