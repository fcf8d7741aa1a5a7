//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored in ascending degree order and kept canonical:
//! no trailing zero coefficient, except the zero polynomial which is the
//! single coefficient `[0]`. JSON form is the array of coefficient strings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming to
    /// canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("canonical form is non-empty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Taylor shift: returns `q` with `q(X) = p(X + c)`.
    ///
    /// Computed by repeated synthetic division, O(deg^2) coefficient
    /// operations.
    ///
    /// ```
    /// use sylkac::{Polynomial, Rational};
    /// let p = Polynomial::from_integer_coeffs(&[0, 0, 1]); // X^2
    /// let q = p.shift(&Rational::one());
    /// assert_eq!(q, Polynomial::from_integer_coeffs(&[1, 2, 1]));
    /// ```
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let d = a.len() - 1;
        for i in 0..d {
            for j in (i..d).rev() {
                let carry = c * &a[j + 1];
                a[j] += &carry;
            }
        }
        // Shifting cannot change the degree, so `a` is already canonical.
        Polynomial { coeffs: a }
    }

    /// Affine substitution: returns `q` with `q(x) = p(a*x + b)`.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> Self {
        let shifted = self.shift(b);
        let mut coeffs = shifted.coeffs;
        let mut pow = Rational::one();
        for c in coeffs.iter_mut().skip(1) {
            pow *= a;
            *c *= &pow;
        }
        Self::new(coeffs)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = self.coeffs.last().cloned().unwrap_or_else(Rational::zero);
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::new(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        // Leading coefficients are nonzero, so no trimming is needed.
        Polynomial { coeffs }
    }
}

impl fmt::Display for Polynomial {
    /// Human form in descending powers, e.g. `x^3 - 4*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integer_coeffs(coeffs)
    }

    #[test]
    fn canonical_zero_is_single_coefficient() {
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(poly(&[0, 0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), 0);
        assert!(Polynomial::zero().is_zero());
        assert!(!poly(&[0, 1]).is_zero());
    }

    #[test]
    fn add_trims_and_respects_identity() {
        // (X^2 - 1) + 1 = X^2
        assert_eq!(&poly(&[-1, 0, 1]) + &poly(&[1]), poly(&[0, 0, 1]));
        // p + 0 = p
        let p = poly(&[3, 0, 2]);
        assert_eq!(&p + &Polynomial::zero(), p);
        // X + (-X) = 0, degree trimmed
        assert_eq!(&poly(&[0, 1]) + &poly(&[0, -1]), Polynomial::zero());
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // (X - 1)(X + 1) = X^2 - 1
        assert_eq!(&poly(&[-1, 1]) * &poly(&[1, 1]), poly(&[-1, 0, 1]));
        let p = poly(&[2, -3, 5]);
        assert_eq!(&p * &Polynomial::one(), p);
        assert_eq!(&p * &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn shift_expands_binomials() {
        // X^2 shifted by 1 -> X^2 + 2X + 1
        assert_eq!(poly(&[0, 0, 1]).shift(&rat(1, 1)), poly(&[1, 2, 1]));
        // identity shift
        let p = poly(&[4, -1, 0, 2]);
        assert_eq!(p.shift(&Rational::zero()), p);
        // (X - 1)^2 - 1 = X^2 - 2X, expanded by hand
        assert_eq!(poly(&[-1, 0, 1]).shift(&rat(-1, 1)), poly(&[0, -2, 1]));
    }

    #[test]
    fn affine_substitute_cases() {
        // p = X with a = b = 3 -> 3x + 3
        assert_eq!(
            Polynomial::x().affine_substitute(&rat(3, 1), &rat(3, 1)),
            poly(&[3, 3])
        );
        // identity substitution
        let p = poly(&[-1, 0, 1]);
        assert_eq!(p.affine_substitute(&Rational::one(), &Rational::zero()), p);
        // X^2 - 1 at X = x + 1 -> x^2 + 2x
        assert_eq!(
            p.affine_substitute(&Rational::one(), &Rational::one()),
            poly(&[0, 2, 1])
        );
        // degenerate scale a = 0 collapses to the constant p(b)
        assert_eq!(
            p.affine_substitute(&Rational::zero(), &rat(2, 1)),
            Polynomial::constant(rat(3, 1))
        );
    }

    #[test]
    fn eval_is_exact() {
        let p = poly(&[-1, 0, 1]); // X^2 - 1
        assert_eq!(p.eval(&rat(1, 1)), Rational::zero());
        assert_eq!(p.eval(&Rational::zero()), rat(-1, 1));
        // p_3(X) = X^3 - 4X vanishes at 2
        assert_eq!(poly(&[0, -4, 0, 1]).eval(&rat(2, 1)), Rational::zero());
        assert_eq!(p.eval(&rat(1, 2)), rat(-3, 4));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(&[0, -4, 0, 1]).to_string(), "x^3 - 4*x");
        assert_eq!(poly(&[9, 0, -10, 0, 1]).to_string(), "x^4 - 10*x^2 + 9");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::new(vec![rat(-1, 2), rat(1, 3)]).to_string(),
            "1/3*x - 1/2"
        );
    }

    #[test]
    fn json_is_array_of_strings() {
        let p = Polynomial::new(vec![rat(0, 1), rat(-1, 2), rat(1, 1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[\"0\",\"-1/2\",\"1\"]");
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    prop_compose! {
        fn arb_rational()(num in -100i64..=100, den in 1i64..=100) -> Rational {
            Rational::new(num, den).unwrap()
        }
    }

    prop_compose! {
        fn arb_poly()(coeffs in prop::collection::vec(arb_rational(), 1..=9)) -> Polynomial {
            Polynomial::new(coeffs)
        }
    }

    proptest! {
        #[test]
        fn shift_round_trips(p in arb_poly(), c in arb_rational()) {
            prop_assert_eq!(p.shift(&c).shift(&(-&c)), p);
        }

        #[test]
        fn identity_substitution_is_identity(p in arb_poly()) {
            prop_assert_eq!(
                p.affine_substitute(&Rational::one(), &Rational::zero()),
                p
            );
        }

        #[test]
        fn eval_commutes_with_shift(p in arb_poly(), c in arb_rational(), x in arb_rational()) {
            prop_assert_eq!(p.shift(&c).eval(&x), p.eval(&(&x + &c)));
        }

        #[test]
        fn mul_distributes_over_add(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let lhs = &p * &(&q + &r);
            let rhs = &(&p * &q) + &(&p * &r);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn mul_degree_adds(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            prop_assert_eq!((&p * &q).degree(), p.degree() + q.degree());
        }

        #[test]
        fn results_stay_canonical(p in arb_poly(), q in arb_poly()) {
            for out in [&p + &q, &p - &q, &p * &q] {
                let rebuilt = Polynomial::new(out.coeffs().to_vec());
                prop_assert_eq!(&rebuilt, &out);
            }
        }
    }
}
