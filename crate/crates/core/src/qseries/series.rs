use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeriesError;

/// A formal power series modulo `t^{N+1}`, stored as `c_0..c_N`.
///
/// Arithmetic requires equal truncations; mixing them is an error rather
/// than a silent re-truncation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Panics on an empty vector; a series always has `c_0`.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(0, BigInt::one(), truncation)
    }

    /// `c·t^d`, which is zero when `d` exceeds the truncation.
    pub fn monomial(d: usize, c: BigInt, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if d <= truncation {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Keeps `c_0..c_m`; `m` must not exceed the current truncation.
    pub fn truncate(&self, m: usize) -> TruncatedSeries {
        assert!(m <= self.truncation(), "cannot raise precision by truncating");
        TruncatedSeries {
            coeffs: self.coeffs[..=m].to_vec(),
        }
    }

    fn same(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.coeffs.len() == other.coeffs.len() {
            Ok(())
        } else {
            Err(SeriesError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            })
        }
    }

    pub fn checked_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same(other)?;
        Ok(TruncatedSeries {
            coeffs: mul_truncated(&self.coeffs, &other.coeffs),
        })
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> TruncatedSeries {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        if d < n {
            coeffs[d..].clone_from_slice(&self.coeffs[..n - d]);
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplies by `1/(1−t^i)`.
    pub fn mul_geometric(&self, i: usize) -> Result<TruncatedSeries, SeriesError> {
        if i == 0 {
            return Err(SeriesError::ZeroFactor);
        }
        let mut coeffs = self.coeffs.clone();
        geometric_in_place(&mut coeffs, i);
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplies by `1−t^i`.
    pub fn mul_one_minus(&self, i: usize) -> Result<TruncatedSeries, SeriesError> {
        if i == 0 {
            return Err(SeriesError::ZeroFactor);
        }
        let mut coeffs = self.coeffs.clone();
        for j in (i..coeffs.len()).rev() {
            let prev = coeffs[j - i].clone();
            coeffs[j] -= prev;
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.truncation());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `index,coefficient` rows after a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,coefficient\n");
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{i},{c}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<TruncatedSeries, SeriesError> {
        serde_json::from_str(text).map_err(|e| SeriesError::Malformed(e.to_string()))
    }
}

/// `c'_j = c_j + c'_{j−i}`.
pub(crate) fn geometric_in_place(coeffs: &mut [BigInt], i: usize) {
    for j in i..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(j);
        hi[0] += &lo[j - i];
    }
}

pub(crate) fn mul_truncated(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn expect_same(a: &TruncatedSeries, b: &TruncatedSeries) {
    if let Err(e) = a.same(b) {
        panic!("{e}");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        expect_same(self, rhs);
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        expect_same(self, rhs);
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        expect_same(self, rhs);
        self.checked_mul(rhs).unwrap()
    }
}

impl fmt::Display for TruncatedSeries {
    /// Comma-separated coefficients `c_0,c_1,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    truncation: usize,
    coefficients: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            truncation: self.truncation(),
            coefficients: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = SeriesJson::deserialize(d)?;
        if raw.coefficients.len() != raw.truncation + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, found {}",
                raw.truncation + 1,
                raw.coefficients.len()
            )));
        }
        let coeffs = raw
            .coefficients
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| D::Error::custom(format!("`{c}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}
