//! Arbitrary-precision rational scalars in canonical form.
//!
//! Every value holds a fully reduced fraction with positive denominator:
//! `gcd(|num|, den) = 1` and `den > 0`. The canonical text form is
//! `"num/den"`, shortened to `"num"` for integers, and is what the JSON
//! serializers emit.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number.
///
/// ```
/// use sylkac::Rational;
/// let half = Rational::new(2, 4).unwrap();
/// assert_eq!(half.to_string(), "1/2");
/// assert_eq!(Rational::new(3, -6).unwrap().to_string(), "-1/2");
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_bigints(BigInt::from(num), BigInt::from(den))
    }

    /// Builds `num/den` from arbitrary-precision parts.
    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// The integer `i` as a rational.
    pub fn from_integer<I: Into<BigInt>>(i: I) -> Self {
        Rational(BigRational::from_integer(i.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero, like integer division.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Nearest binary64 value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_owned());
        match s.split_once('/') {
            None => {
                let num = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(num)))
            }
            Some((num, den)) => {
                let num = BigInt::from_str(num).map_err(|_| bad())?;
                let den = BigInt::from_str(den).map_err(|_| bad())?;
                Self::from_bigints(num, den).map_err(|_| bad())
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(i: i64) -> Self {
        Self::from_integer(i)
    }
}

impl From<i32> for Rational {
    fn from(i: i32) -> Self {
        Self::from_integer(i)
    }
}

impl From<u32> for Rational {
    fn from(i: u32) -> Self {
        Self::from_integer(i)
    }
}

impl From<BigInt> for Rational {
    fn from(i: BigInt) -> Self {
        Self::from_integer(i)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    #[test]
    fn construction_reduces_to_canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(rat(0, 7).to_string(), "0");
        assert_eq!(rat(0, 7), Rational::zero());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(Rational::new(0, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn canonical_invariant_holds_after_arithmetic() {
        let cases = [
            rat(1, 2) + rat(1, 3),
            rat(1, 2) - rat(1, 2),
            rat(2, 3) * rat(3, 2),
            rat(-5, 7) / rat(10, 21),
        ];
        for value in cases {
            let rebuilt =
                Rational::from_bigints(value.numerator().clone(), value.denominator().clone())
                    .unwrap();
            assert_eq!(value, rebuilt);
            assert!(value.denominator().is_positive());
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "123456789123456789/2"] {
            let v: Rational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/", "/2", "1/0", "1/2/3", "1.5"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn json_uses_string_form() {
        let v = rat(-22, 7);
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"-22/7\"");
        let back: Rational = serde_json::from_str("\"-22/7\"").unwrap();
        assert_eq!(back, v);
        let int: Rational = serde_json::from_str("\"5\"").unwrap();
        assert_eq!(int, rat(5, 1));
    }

    #[test]
    fn ordering_is_by_value() {
        assert!(rat(-2, 1) < rat(-1, 1));
        assert!(rat(1, 3) < rat(1, 2));
        assert!(rat(-1, 2) < rat(1, 3));
    }
}
