//! Characteristic polynomials of the Sylvester-Kac and biogeography
//! matrices by four independent routes, plus a brute-force determinant
//! oracle.
//!
//! The displayed Sylvester determinant carries `X` on the diagonal with
//! positive off-diagonals, i.e. det(X*I + K). The continuant recurrence
//! depends on the off-diagonal bands only through the products
//! `sub * super`, so det(X*I + K) and det(X*I - K) coincide for the
//! zero-diagonal K; `build_charpoly_report` exploits that reconciliation
//! and the test suite asserts it.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{biogeography_matrix, sylvester_kac, TridiagonalMatrix};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Largest order accepted by [`leibniz_det`]; 8! permutation terms.
pub const LEIBNIZ_MAX_ORDER: usize = 8;

/// The characteristic polynomial det(X*I - M) of a tridiagonal matrix,
/// by the three-term recurrence on leading principal minors:
///
/// D_k(X) = (X - d_k) D_{k-1}(X) - sub_{k-1} super_{k-1} D_{k-2}(X)
///
/// with D_0 = 1. Exact; monic of degree equal to the order.
pub fn charpoly_continuant(m: &TridiagonalMatrix) -> Polynomial {
    let mut prev = Polynomial::one();
    let mut current = Polynomial::zero();
    for k in 0..m.order() {
        let factor = Polynomial::new(vec![-&m.diag()[k], Rational::one()]);
        let next = if k == 0 {
            &factor * &prev
        } else {
            let offdiag = &m.subdiag()[k - 1] * &m.superdiag()[k - 1];
            &(&factor * &current) - &prev.scale(&offdiag)
        };
        if k > 0 {
            prev = current;
        }
        current = next;
    }
    current
}

/// p_{n+1}(X) by the forward recurrence p_m(X) = (X - (m-1)) p_{m-1}(X+1),
/// starting from p_1(X) = X.
pub fn sylvester_charpoly_taussky_todd(n: u32) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let one = Rational::one();
    let mut p = Polynomial::x();
    for m in 2..=(n as i64 + 1) {
        let factor = Polynomial::new(vec![Rational::from(-(m - 1)), Rational::one()]);
        p = &factor * &p.shift(&one);
    }
    Ok(p)
}

/// p_{n+1}(X) by the alternative recurrence p_m(X) = (X + (m-1)) p_{m-1}(X-1),
/// starting from p_1(X) = X.
pub fn sylvester_charpoly_proskuryakov(n: u32) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let minus_one = Rational::from(-1);
    let mut p = Polynomial::x();
    for m in 2..=(n as i64 + 1) {
        let factor = Polynomial::new(vec![Rational::from(m - 1), Rational::one()]);
        p = &factor * &p.shift(&minus_one);
    }
    Ok(p)
}

/// p_{n+1}(X) as the expanded product of its linear factors,
/// prod_{k=1}^{n+1} (X + n - 2k + 2).
pub fn sylvester_charpoly_product(n: u32) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let mut p = Polynomial::one();
    for k in 1..=(n as i64 + 1) {
        let root_offset = n as i64 - 2 * k + 2;
        let factor = Polynomial::new(vec![Rational::from(root_offset), Rational::one()]);
        p = &p * &factor;
    }
    Ok(p)
}

/// det(x*I - A_{n+1}) as n^-(n+1) p_{n+1}(n*x + n), exact and monic.
pub fn biogeography_charpoly(n: u32) -> Result<Polynomial> {
    let p = sylvester_charpoly_product(n)?;
    Ok(rescale_to_biogeography(&p, n))
}

/// Applies the change of variables X = n(x+1) and the n^-(n+1) scaling
/// that maps p_{n+1} to det(x*I - A_{n+1}).
fn rescale_to_biogeography(p: &Polynomial, n: u32) -> Polynomial {
    let n_rat = Rational::from(n);
    let substituted = p.affine_substitute(&n_rat, &n_rat);
    let scale = Rational::from_bigints(BigInt::one(), BigInt::from(n).pow(n + 1))
        .expect("positive power of n >= 1");
    substituted.scale(&scale)
}

/// det(shift*I - M) by full permutation expansion over the dense form.
/// An independent oracle; rejects orders above [`LEIBNIZ_MAX_ORDER`].
pub fn leibniz_det(m: &TridiagonalMatrix, shift: &Rational) -> Result<Rational> {
    let order = m.order();
    if order > LEIBNIZ_MAX_ORDER {
        return Err(Error::SizeGuard {
            what: "leibniz_det",
            limit: LEIBNIZ_MAX_ORDER as u32,
            got: order as u32,
        });
    }

    let dense: Vec<Vec<Rational>> = (0..order)
        .map(|i| {
            (0..order)
                .map(|j| {
                    let m_ij = m.entry(i, j);
                    if i == j {
                        shift - &m_ij
                    } else {
                        -m_ij
                    }
                })
                .collect()
        })
        .collect();

    let product_for = |perm: &[usize]| -> Rational {
        let mut prod = Rational::one();
        for (row, &col) in perm.iter().enumerate() {
            let entry = &dense[row][col];
            if entry.is_zero() {
                return Rational::zero();
            }
            prod *= entry;
        }
        prod
    };

    // Heap's algorithm; every swap flips the permutation sign.
    let mut perm: Vec<usize> = (0..order).collect();
    let mut positive = true;
    let mut det = product_for(&perm);
    let mut counters = vec![0usize; order];
    let mut i = 0;
    while i < order {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            positive = !positive;
            let term = product_for(&perm);
            if positive {
                det += &term;
            } else {
                det -= &term;
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(det)
}

/// One characteristic polynomial computed four independent ways.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharpolyReport {
    pub n: u32,
    pub via_taussky_todd: Polynomial,
    pub via_proskuryakov: Polynomial,
    pub via_product: Polynomial,
    pub via_continuant: Polynomial,
    pub all_equal: bool,
}

impl CharpolyReport {
    fn assemble(
        n: u32,
        via_taussky_todd: Polynomial,
        via_proskuryakov: Polynomial,
        via_product: Polynomial,
        via_continuant: Polynomial,
    ) -> Self {
        let all_equal = via_taussky_todd == via_proskuryakov
            && via_taussky_todd == via_product
            && via_taussky_todd == via_continuant;
        CharpolyReport {
            n,
            via_taussky_todd,
            via_proskuryakov,
            via_product,
            via_continuant,
            all_equal,
        }
    }
}

/// Computes p_{n+1}(X) by all four routes. The continuant route works on
/// -K so that it reproduces det(X*I + K), the determinant as displayed.
pub fn build_charpoly_report(n: u32) -> Result<CharpolyReport> {
    let k = sylvester_kac(n)?;
    let negated = k.affine_combine(&Rational::from(-1), &Rational::zero());
    Ok(CharpolyReport::assemble(
        n,
        sylvester_charpoly_taussky_todd(n)?,
        sylvester_charpoly_proskuryakov(n)?,
        sylvester_charpoly_product(n)?,
        charpoly_continuant(&negated),
    ))
}

/// The biogeography analogue of [`build_charpoly_report`]: the three
/// polynomial routes are carried through the X = n(x+1) rescaling, while
/// the continuant route works directly on A_{n+1}. Their agreement is the
/// affine change-of-variables identity, route by route.
pub fn build_biogeography_report(n: u32) -> Result<CharpolyReport> {
    let a = biogeography_matrix(n)?;
    Ok(CharpolyReport::assemble(
        n,
        rescale_to_biogeography(&sylvester_charpoly_taussky_todd(n)?, n),
        rescale_to_biogeography(&sylvester_charpoly_proskuryakov(n)?, n),
        rescale_to_biogeography(&sylvester_charpoly_product(n)?, n),
        charpoly_continuant(&a),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integer_coeffs(coeffs)
    }

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    /// p(-X): flips the sign of every odd coefficient.
    fn negate_variable(p: &Polynomial) -> Polynomial {
        let coeffs = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect();
        Polynomial::new(coeffs)
    }

    #[test]
    fn continuant_on_small_matrices() {
        let k1 = sylvester_kac(1).unwrap();
        assert_eq!(charpoly_continuant(&k1), poly(&[-1, 0, 1]));
        let k2 = sylvester_kac(2).unwrap();
        assert_eq!(charpoly_continuant(&k2), poly(&[0, -4, 0, 1]));
        let a1 = biogeography_matrix(1).unwrap();
        assert_eq!(charpoly_continuant(&a1), poly(&[0, 2, 1]));
    }

    #[test]
    fn taussky_todd_route() {
        assert_eq!(sylvester_charpoly_taussky_todd(1).unwrap(), poly(&[-1, 0, 1]));
        assert_eq!(
            sylvester_charpoly_taussky_todd(2).unwrap(),
            poly(&[0, -4, 0, 1])
        );
        assert_eq!(
            sylvester_charpoly_taussky_todd(3).unwrap(),
            poly(&[9, 0, -10, 0, 1])
        );
        assert_eq!(
            sylvester_charpoly_taussky_todd(0),
            Err(Error::InvalidParameter(0))
        );
    }

    #[test]
    fn proskuryakov_route() {
        assert_eq!(
            sylvester_charpoly_proskuryakov(1).unwrap(),
            poly(&[-1, 0, 1])
        );
        assert_eq!(
            sylvester_charpoly_proskuryakov(2).unwrap(),
            poly(&[0, -4, 0, 1])
        );
        assert_eq!(
            sylvester_charpoly_proskuryakov(5).unwrap(),
            sylvester_charpoly_taussky_todd(5).unwrap()
        );
        assert_eq!(
            sylvester_charpoly_proskuryakov(0),
            Err(Error::InvalidParameter(0))
        );
    }

    #[test]
    fn product_route() {
        assert_eq!(sylvester_charpoly_product(1).unwrap(), poly(&[-1, 0, 1]));
        assert_eq!(sylvester_charpoly_product(2).unwrap(), poly(&[0, -4, 0, 1]));
        assert_eq!(
            sylvester_charpoly_product(3).unwrap(),
            poly(&[9, 0, -10, 0, 1])
        );
        assert_eq!(sylvester_charpoly_product(0), Err(Error::InvalidParameter(0)));
    }

    #[test]
    fn biogeography_charpoly_examples() {
        assert_eq!(biogeography_charpoly(1).unwrap(), poly(&[0, 2, 1]));
        assert_eq!(biogeography_charpoly(2).unwrap(), poly(&[0, 2, 3, 1]));
        for n in 1..=20 {
            let p = biogeography_charpoly(n).unwrap();
            assert!(p.coeff(0).is_zero(), "constant coefficient at n = {n}");
            assert!(p.is_monic());
            assert_eq!(p.degree(), n as usize + 1);
        }
    }

    #[test]
    fn leibniz_examples() {
        let k1 = sylvester_kac(1).unwrap();
        assert_eq!(leibniz_det(&k1, &rat(1, 1)).unwrap(), Rational::zero());
        let k2 = sylvester_kac(2).unwrap();
        assert_eq!(leibniz_det(&k2, &rat(3, 1)).unwrap(), rat(15, 1));
        let a2 = biogeography_matrix(2).unwrap();
        assert_eq!(leibniz_det(&a2, &Rational::zero()).unwrap(), Rational::zero());
    }

    #[test]
    fn leibniz_guard_rejects_large_orders() {
        let k8 = sylvester_kac(8).unwrap(); // order 9
        assert_eq!(
            leibniz_det(&k8, &Rational::zero()),
            Err(Error::SizeGuard {
                what: "leibniz_det",
                limit: 8,
                got: 9
            })
        );
        // order 8 is still allowed
        let k7 = sylvester_kac(7).unwrap();
        assert!(leibniz_det(&k7, &Rational::zero()).is_ok());
    }

    #[test]
    fn leibniz_agrees_with_continuant_at_random_shifts() {
        let mut rng = StdRng::seed_from_u64(0x5CA1E);
        for n in 1..=7u32 {
            let matrices = [
                sylvester_kac(n).unwrap(),
                biogeography_matrix(n).unwrap(),
            ];
            for m in &matrices {
                let p = charpoly_continuant(m);
                for _ in 0..5 {
                    let shift = rat(rng.gen_range(-20..=20), rng.gen_range(1..=10));
                    assert_eq!(
                        leibniz_det(m, &shift).unwrap(),
                        p.eval(&shift),
                        "n = {n}, shift = {shift}"
                    );
                }
            }
        }
    }

    #[test]
    fn report_routes_agree() {
        let r1 = build_charpoly_report(1).unwrap();
        assert!(r1.all_equal);
        assert_eq!(r1.via_product, poly(&[-1, 0, 1]));
        let r2 = build_charpoly_report(2).unwrap();
        assert!(r2.all_equal);
        assert_eq!(r2.via_continuant, poly(&[0, -4, 0, 1]));
        for n in 1..=12 {
            let report = build_charpoly_report(n).unwrap();
            assert!(report.all_equal, "route mismatch at n = {n}");
            assert!(report.via_product.is_monic());
            assert_eq!(report.via_product.degree(), n as usize + 1);
        }
    }

    #[test]
    fn biogeography_report_routes_agree() {
        for n in 1..=12 {
            let report = build_biogeography_report(n).unwrap();
            assert!(report.all_equal, "affine identity fails at n = {n}");
            assert_eq!(report.via_continuant, biogeography_charpoly(n).unwrap());
        }
    }

    #[test]
    fn parity_symmetry_of_sylvester_charpoly() {
        for n in 1..=12u32 {
            let p = sylvester_charpoly_product(n).unwrap();
            let expected = if (n + 1) % 2 == 0 {
                p.clone()
            } else {
                -&p
            };
            assert_eq!(negate_variable(&p), expected, "n = {n}");
        }
    }

    #[test]
    fn continuant_ignores_offdiagonal_signs() {
        for n in 1..=12 {
            let k = sylvester_kac(n).unwrap();
            let negated = k.affine_combine(&rat(-1, 1), &Rational::zero());
            assert_eq!(
                charpoly_continuant(&k),
                charpoly_continuant(&negated),
                "n = {n}"
            );
        }
    }

    #[test]
    fn affine_identity_between_families() {
        for n in 1..=12 {
            let a = biogeography_matrix(n).unwrap();
            assert_eq!(
                biogeography_charpoly(n).unwrap(),
                charpoly_continuant(&a),
                "n = {n}"
            );
        }
    }

    #[test]
    fn report_json_round_trips() {
        let report = build_charpoly_report(3).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: CharpolyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    prop_compose! {
        fn arb_band_entry()(num in -9i64..=9, den in 1i64..=9) -> Rational {
            Rational::new(num, den).unwrap()
        }
    }

    proptest! {
        /// Redistributing each off-diagonal pair (s, t) to (s*t, 1) must not
        /// change the continuant: it depends only on the products.
        #[test]
        fn continuant_depends_only_on_offdiagonal_products(
            diag in prop::collection::vec(arb_band_entry(), 1..=8),
        ) {
            let order = diag.len();
            let superdiag: Vec<Rational> = diag[..order - 1].to_vec();
            let subdiag: Vec<Rational> = diag[1..].to_vec();
            prop_assume!(order >= 1);
            let m = TridiagonalMatrix::new(diag.clone(), superdiag.clone(), subdiag.clone()).unwrap();
            let redistributed = TridiagonalMatrix::new(
                diag,
                superdiag
                    .iter()
                    .zip(&subdiag)
                    .map(|(s, t)| s * t)
                    .collect(),
                vec![Rational::one(); order - 1],
            )
            .unwrap();
            prop_assert_eq!(charpoly_continuant(&m), charpoly_continuant(&redistributed));
        }
    }
}
