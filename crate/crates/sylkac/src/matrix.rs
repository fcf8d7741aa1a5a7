//! Tridiagonal matrices over [`Rational`], with constructors for the
//! Sylvester-Kac (Clement) matrix and its biogeography rescaling.
//!
//! Bands follow the usual convention: `superdiag[k]` is entry (k, k+1) and
//! `subdiag[k]` is entry (k+1, k), zero-based.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A square tridiagonal matrix held as its three bands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TridiagonalMatrix {
    order: usize,
    diag: Vec<Rational>,
    #[serde(rename = "super")]
    superdiag: Vec<Rational>,
    #[serde(rename = "sub")]
    subdiag: Vec<Rational>,
}

impl TridiagonalMatrix {
    /// Builds a matrix from its bands. The order is the diagonal length;
    /// both off-diagonal bands must be one entry shorter.
    pub fn new(
        diag: Vec<Rational>,
        superdiag: Vec<Rational>,
        subdiag: Vec<Rational>,
    ) -> Result<Self> {
        let order = diag.len();
        if order == 0 || superdiag.len() != order - 1 || subdiag.len() != order - 1 {
            return Err(Error::BandMismatch {
                order,
                off: order.saturating_sub(1),
            });
        }
        Ok(TridiagonalMatrix {
            order,
            diag,
            superdiag,
            subdiag,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn superdiag(&self) -> &[Rational] {
        &self.superdiag
    }

    pub fn subdiag(&self) -> &[Rational] {
        &self.subdiag
    }

    /// Entry (row, col), zero-based; zero outside the three bands.
    pub fn entry(&self, row: usize, col: usize) -> Rational {
        assert!(row < self.order && col < self.order, "index out of range");
        if row == col {
            self.diag[row].clone()
        } else if col == row + 1 {
            self.superdiag[row].clone()
        } else if row == col + 1 {
            self.subdiag[col].clone()
        } else {
            Rational::zero()
        }
    }

    /// Returns `alpha * self + beta * I`.
    pub fn affine_combine(&self, alpha: &Rational, beta: &Rational) -> Self {
        TridiagonalMatrix {
            order: self.order,
            diag: self.diag.iter().map(|d| d * alpha + beta).collect(),
            superdiag: self.superdiag.iter().map(|s| s * alpha).collect(),
            subdiag: self.subdiag.iter().map(|s| s * alpha).collect(),
        }
    }

    /// Exact per-column entry sums.
    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.order)
            .map(|col| {
                let mut sum = self.diag[col].clone();
                if col > 0 {
                    sum += &self.superdiag[col - 1];
                }
                if col + 1 < self.order {
                    sum += &self.subdiag[col];
                }
                sum
            })
            .collect()
    }

    /// Trace, exact.
    pub fn trace(&self) -> Rational {
        self.diag.iter().sum()
    }

    /// Matrix-vector product, exact. Panics if the length is wrong.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.order, "vector length must match the order");
        (0..self.order)
            .map(|i| {
                let mut acc = &self.diag[i] * &v[i];
                if i > 0 {
                    acc += &(&self.subdiag[i - 1] * &v[i - 1]);
                }
                if i + 1 < self.order {
                    acc += &(&self.superdiag[i] * &v[i + 1]);
                }
                acc
            })
            .collect()
    }
}

impl<'de> Deserialize<'de> for TridiagonalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: usize,
            diag: Vec<Rational>,
            #[serde(rename = "super")]
            superdiag: Vec<Rational>,
            #[serde(rename = "sub")]
            subdiag: Vec<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.diag.len() != raw.order {
            return Err(serde::de::Error::custom(format!(
                "diagonal length {} does not match order {}",
                raw.diag.len(),
                raw.order
            )));
        }
        TridiagonalMatrix::new(raw.diag, raw.superdiag, raw.subdiag)
            .map_err(serde::de::Error::custom)
    }
}

/// The two matrix families exposed by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFamily {
    /// Zero diagonal, superdiagonal 1..n, subdiagonal n..1.
    SylvesterKac,
    /// The Sylvester-Kac matrix scaled by 1/n with -1 on the diagonal.
    Biogeography,
}

impl MatrixFamily {
    pub fn matrix(self, n: u32) -> Result<TridiagonalMatrix> {
        match self {
            MatrixFamily::SylvesterKac => sylvester_kac(n),
            MatrixFamily::Biogeography => biogeography_matrix(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatrixFamily::SylvesterKac => "kac",
            MatrixFamily::Biogeography => "bio",
        }
    }
}

impl std::str::FromStr for MatrixFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kac" => Ok(MatrixFamily::SylvesterKac),
            "bio" => Ok(MatrixFamily::Biogeography),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// The Sylvester-Kac (Clement) matrix of order n+1: zero diagonal,
/// superdiagonal entries 1, 2, ..., n and subdiagonal entries n, ..., 2, 1.
///
/// ```
/// use sylkac::{sylvester_kac, Rational};
/// let k = sylvester_kac(2).unwrap();
/// assert_eq!(k.superdiag(), [Rational::from(1), Rational::from(2)]);
/// assert_eq!(k.subdiag(), [Rational::from(2), Rational::from(1)]);
/// ```
pub fn sylvester_kac(n: u32) -> Result<TridiagonalMatrix> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let order = n as usize + 1;
    let diag = vec![Rational::zero(); order];
    let superdiag = (1..=n).map(|k| Rational::from(k as i64)).collect();
    let subdiag = (1..=n).map(|k| Rational::from((n - k + 1) as i64)).collect();
    TridiagonalMatrix::new(diag, superdiag, subdiag)
}

/// The biogeography migration matrix of order n+1: diagonal -1,
/// superdiagonal k/n, subdiagonal (n-k+1)/n. Equals (1/n)K - I for the
/// Sylvester-Kac matrix K of the same order.
pub fn biogeography_matrix(n: u32) -> Result<TridiagonalMatrix> {
    if n < 1 {
        return Err(Error::InvalidParameter(n));
    }
    let order = n as usize + 1;
    let minus_one = Rational::from(-1);
    let diag = vec![minus_one; order];
    let superdiag: Vec<Rational> = (1..=n)
        .map(|k| Rational::new(k as i64, n as i64))
        .collect::<Result<_>>()?;
    let subdiag: Vec<Rational> = (1..=n)
        .map(|k| Rational::new((n - k + 1) as i64, n as i64))
        .collect::<Result<_>>()?;
    TridiagonalMatrix::new(diag, superdiag, subdiag)
}
