//! Wall-clock comparison of the three eigenvalue routes: closed form,
//! Sturm bisection, and the exact characteristic polynomial.
//!
//! Each measurement is the median of five runs of the full computation;
//! matrix construction is excluded. Methods whose cost guard is exceeded
//! produce a skipped record instead of an error, so a sweep over a range
//! stays usable.

use std::hint::black_box;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly_continuant;
use crate::error::{Error, Result};
use crate::matrix::MatrixFamily;
use crate::rational::Rational;
use crate::spectra::{bisection_eigenvalues, validate_tolerance, Spectrum};

/// Largest n for which the exact characteristic polynomial is timed; the
/// coefficients grow factorially and bignum cost dominates beyond this.
pub const EXACT_CHARPOLY_MAX_N: u32 = 64;

/// Largest n for which the bisection route is timed; the solver is
/// O(n^2 log(1/tol)) and minutes-long runs help nobody.
pub const BISECTION_MAX_N: u32 = 5000;

/// Largest n for which full eigenvector certificates are produced on
/// request; entries are binomial-sized and the output grows quadratically.
pub const EIGVEC_MAX_N: u32 = 256;

const RUNS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchMethod {
    ClosedForm,
    Bisection,
    ExactCharpoly,
}

impl BenchMethod {
    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::ClosedForm => "closed_form",
            BenchMethod::Bisection => "bisection",
            BenchMethod::ExactCharpoly => "exact_charpoly",
        }
    }
}

/// Either a timed run with its checksum or the reason it was skipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BenchOutcome {
    Timed { wall_time_ns: u64, checksum: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: u32,
    pub method: BenchMethod,
    #[serde(flatten)]
    pub outcome: BenchOutcome,
}

fn median_timed<T>(mut work: impl FnMut() -> T) -> (u64, T) {
    let mut times = Vec::with_capacity(RUNS);
    let mut result = None;
    for _ in 0..RUNS {
        let start = Instant::now();
        let value = black_box(work());
        times.push(start.elapsed().as_nanos() as u64);
        result = Some(value);
    }
    times.sort_unstable();
    (times[RUNS / 2], result.expect("RUNS > 0"))
}

fn exact_sum(spectrum: &Spectrum) -> Rational {
    spectrum
        .exact_values()
        .expect("closed forms are exact")
        .iter()
        .sum()
}

/// Times every method at every requested n for one matrix family.
///
/// Records come out grouped by n, methods in the order closed_form,
/// bisection, exact_charpoly. `tol` is the bisection tolerance.
pub fn run_bench(family: MatrixFamily, ns: &[u32], tol: f64) -> Result<Vec<BenchRecord>> {
    validate_tolerance(tol)?;
    if let Some(&bad) = ns.iter().find(|&&n| n < 1) {
        return Err(Error::InvalidParameter(bad));
    }
    let mut records = Vec::with_capacity(ns.len() * 3);
    for &n in ns {
        let closed = family.closed_form_spectrum(n)?;
        let (wall_time_ns, _) = median_timed(|| {
            family
                .closed_form_spectrum(n)
                .expect("validated above")
        });
        records.push(BenchRecord {
            n,
            method: BenchMethod::ClosedForm,
            outcome: BenchOutcome::Timed {
                wall_time_ns,
                checksum: exact_sum(&closed).to_string(),
            },
        });

        records.push(if n <= BISECTION_MAX_N {
            let m = family.matrix(n)?;
            let (wall_time_ns, spectrum) =
                median_timed(|| bisection_eigenvalues(&m, tol).expect("tol validated above"));
            let checksum: f64 = spectrum.float_values().expect("bisection is float").iter().sum();
            BenchRecord {
                n,
                method: BenchMethod::Bisection,
                outcome: BenchOutcome::Timed {
                    wall_time_ns,
                    checksum: checksum.to_string(),
                },
            }
        } else {
            BenchRecord {
                n,
                method: BenchMethod::Bisection,
                outcome: BenchOutcome::Skipped {
                    reason: format!("n exceeds the bisection guard of {BISECTION_MAX_N}"),
                },
            }
        });

        records.push(if n <= EXACT_CHARPOLY_MAX_N {
            let m = family.matrix(n)?;
            let (wall_time_ns, poly) = median_timed(|| charpoly_continuant(&m));
            // minus the second-highest coefficient of the monic polynomial:
            // the exact sum of the eigenvalues, comparable across methods
            let checksum = -poly.coeff(poly.degree() - 1);
            BenchRecord {
                n,
                method: BenchMethod::ExactCharpoly,
                outcome: BenchOutcome::Timed {
                    wall_time_ns,
                    checksum: checksum.to_string(),
                },
            }
        } else {
            BenchRecord {
                n,
                method: BenchMethod::ExactCharpoly,
                outcome: BenchOutcome::Skipped {
                    reason: format!("n exceeds the exact charpoly guard of {EXACT_CHARPOLY_MAX_N}"),
                },
            }
        });
    }
    Ok(records)
}
