//! Cross-route verification over a range of matrix parameters.
//!
//! Each named check pits independently derived results against each other:
//! closed forms against recurrences, exact certificates against the
//! matrices, floating-point bisection against exact eigenvalues. A check
//! that would blow past a cost guard is counted as skipped rather than
//! silently dropped or failed.

use serde::{Deserialize, Serialize};

use crate::bench::{BISECTION_MAX_N, EIGVEC_MAX_N, EXACT_CHARPOLY_MAX_N};
use crate::charpoly::{build_biogeography_report, build_charpoly_report};
use crate::error::{Error, Result};
use crate::matrix::{biogeography_matrix, sylvester_kac, TridiagonalMatrix};
use crate::rational::Rational;
use crate::spectra::{
    biogeography_eigenvalues, bisection_eigenvalues, exact_eigenvector, stationary_vector,
    sylvester_eigenvalues, validate_tolerance,
};

/// Tally of one named check across the verified range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: u32,
    pub failed: u32,
    pub skipped: u32,
    pub failing_ns: Vec<u32>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            skipped: 0,
            failing_ns: Vec::new(),
        }
    }

    fn record(&mut self, n: u32, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failing_ns.push(n);
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }
}

/// Results of [`run_verification`]: one outcome per check, in a fixed order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub start: u32,
    pub end: u32,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

/// Every column of a Markov generator must sum to exactly zero.
pub(crate) fn column_sums_are_zero(m: &TridiagonalMatrix) -> bool {
    m.column_sums().iter().all(Rational::is_zero)
}

/// Every claimed eigenvalue must produce an exact residual-zero certificate.
pub(crate) fn certificates_cover(m: &TridiagonalMatrix, expected: &[Rational]) -> bool {
    expected.iter().all(|lambda| {
        exact_eigenvector(m, lambda)
            .map(|pair| pair.residual_is_zero)
            .unwrap_or(false)
    })
}

/// Bisection eigenvalues must agree with the exact ones to 100 * tol,
/// relative to the eigenvalue scale.
pub(crate) fn bisection_matches(m: &TridiagonalMatrix, expected: &[Rational], tol: f64) -> bool {
    let spectrum = match bisection_eigenvalues(m, tol) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let got = spectrum.float_values().expect("bisection produces floats");
    got.len() == expected.len()
        && got.iter().zip(expected).all(|(g, e)| {
            let e = e.to_f64();
            (g - e).abs() <= 100.0 * tol * e.abs().max(1.0)
        })
}

/// The stationary vector must be a positive, sum-one null vector of the
/// generator, and must agree with the independently computed lambda = 0
/// eigenvector certificate.
pub(crate) fn stationary_is_consistent(n: u32) -> bool {
    let a = match biogeography_matrix(n) {
        Ok(a) => a,
        Err(_) => return false,
    };
    let v = match stationary_vector(n) {
        Ok(v) => v,
        Err(_) => return false,
    };
    if !v.iter().all(Rational::is_positive) {
        return false;
    }
    let total: Rational = v.iter().sum();
    if !total.is_one() || !a.apply(&v).iter().all(Rational::is_zero) {
        return false;
    }
    let pair = match exact_eigenvector(&a, &Rational::zero()) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let sum: Rational = pair.vector.iter().sum();
    let normalized: Vec<Rational> = pair.vector.iter().map(|x| x / &sum).collect();
    v == normalized
}

/// Shape of both closed-form spectra: length, monotonicity, endpoints,
/// spacing, trace identity, negation symmetry.
pub(crate) fn structure_holds(n: u32) -> bool {
    let bio_spectrum = match biogeography_eigenvalues(n) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let bio = bio_spectrum.exact_values().expect("closed form is exact");
    let kac_spectrum = match sylvester_eigenvalues(n) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let kac = kac_spectrum.exact_values().expect("closed form is exact");

    let len = n as usize + 1;
    if bio.len() != len || kac.len() != len {
        return false;
    }
    if !bio.windows(2).all(|w| w[0] < w[1]) || !kac.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }

    let gap = Rational::new(2, n as i64).expect("n >= 1");
    if bio[0] != Rational::from(-2)
        || !bio[len - 1].is_zero()
        || !bio.windows(2).all(|w| &w[1] - &w[0] == gap)
    {
        return false;
    }
    let bio_sum: Rational = bio.iter().sum();
    let trace = match biogeography_matrix(n) {
        Ok(a) => a.trace(),
        Err(_) => return false,
    };
    if bio_sum != trace || bio_sum != Rational::from(-(n as i64) - 1) {
        return false;
    }

    let kac_sum: Rational = kac.iter().sum();
    let two = Rational::from(2);
    let negated: Vec<Rational> = kac.iter().rev().map(|v| -v).collect();
    kac_sum.is_zero()
        && negated == kac
        && kac.windows(2).all(|w| &w[1] - &w[0] == two)
        && kac.contains(&Rational::zero()) == n.is_multiple_of(2)
}

/// Runs every named check for each n in `start..=end`.
///
/// Checks whose cost guard a given n exceeds are tallied as skipped for
/// that n. `tol` is the bisection tolerance; agreement is required to
/// 100 * tol. `all_passed` ignores skips: it is true iff no check failed.
pub fn run_verification(start: u32, end: u32, tol: f64) -> Result<VerifySummary> {
    if start < 1 {
        return Err(Error::InvalidParameter(start));
    }
    if end < start {
        return Err(Error::EmptyRange { start, end });
    }
    validate_tolerance(tol)?;

    let mut column_sums = CheckOutcome::new("column_sums");
    let mut route_equivalence = CheckOutcome::new("route_equivalence");
    let mut affine_identity = CheckOutcome::new("affine_identity");
    let mut certificates = CheckOutcome::new("eigenvector_certificates");
    let mut stationary = CheckOutcome::new("stationary_vector");
    let mut bisection = CheckOutcome::new("bisection_agreement");
    let mut structure = CheckOutcome::new("spectral_structure");

    for n in start..=end {
        let bio = biogeography_matrix(n).expect("n >= 1");
        let kac = sylvester_kac(n).expect("n >= 1");
        let bio_spectrum = biogeography_eigenvalues(n).expect("n >= 1");
        let bio_values = bio_spectrum.exact_values().expect("closed form is exact");
        let kac_spectrum = sylvester_eigenvalues(n).expect("n >= 1");
        let kac_values = kac_spectrum.exact_values().expect("closed form is exact");

        column_sums.record(n, column_sums_are_zero(&bio));

        if n <= EXACT_CHARPOLY_MAX_N {
            let report = build_charpoly_report(n).expect("n >= 1");
            route_equivalence.record(n, report.all_equal);
            let bio_report = build_biogeography_report(n).expect("n >= 1");
            affine_identity.record(n, bio_report.all_equal);
        } else {
            route_equivalence.skip();
            affine_identity.skip();
        }

        if n <= EIGVEC_MAX_N {
            certificates.record(
                n,
                certificates_cover(&bio, bio_values) && certificates_cover(&kac, kac_values),
            );
            stationary.record(n, stationary_is_consistent(n));
        } else {
            certificates.skip();
            stationary.skip();
        }

        if n <= BISECTION_MAX_N {
            bisection.record(
                n,
                bisection_matches(&bio, bio_values, tol) && bisection_matches(&kac, kac_values, tol),
            );
        } else {
            bisection.skip();
        }

        structure.record(n, structure_holds(n));
    }

    let checks = vec![
        column_sums,
        route_equivalence,
        affine_identity,
        certificates,
        stationary,
        bisection,
        structure,
    ];
    let all_passed = checks.iter().all(|c| c.failed == 0);
    Ok(VerifySummary {
        start,
        end,
        checks,
        all_passed,
    })
}
