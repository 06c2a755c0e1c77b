//! Constrained integer partitions and standard-monomial counting.

mod standard;

pub use standard::standard_monomial_series;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::PartitionError;
use crate::groebner::MonomialIdeal;
use crate::poly::{Monomial, VarId};
use crate::qseries::{restricted_product, TruncatedSeries};

/// Largest integer [`enumerate_partitions`] accepts.
pub const ENUMERATION_LIMIT: usize = 60;

/// A partition, with parts stored non-increasing: `(4, 3, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the given parts into the canonical non-increasing order.
    /// Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// From the non-decreasing convention `λ_1 ≤ λ_2 ≤ …`.
    pub fn from_nondecreasing(parts: &[u32]) -> Self {
        Self::new(parts.to_vec())
    }

    /// The parts in non-decreasing order; inverse of [`Partition::from_nondecreasing`].
    pub fn to_nondecreasing(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// The monomial `∏ y_{λ_j}`, whose weight is the partitioned integer.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.parts.iter().map(|&p| (VarId::y(p), 1)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A restriction on which partitions are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionConstraint {
    Unrestricted,
    /// Parts whose residue modulo `modulus` is not in `excluded`.
    Residues {
        modulus: u32,
        excluded: BTreeSet<u32>,
    },
    /// `λ_j − λ_{j+k−1} ≥ 2` on the non-increasing parts.
    GordonGap(u32),
    /// `mult(v) + mult(v+1) ≤ k − 1` for every value `v`.
    MultiplicityWindow(u32),
    /// `∏ y_{λ_j}` lies outside the ideal.
    AvoidMonomialIdeal(MonomialIdeal),
}

impl PartitionConstraint {
    /// The residue side of Gordon's identity: parts `≢ 0, k, k+1 (mod 2k+1)`.
    pub fn gordon_residues(k: u32) -> Self {
        PartitionConstraint::Residues {
            modulus: 2 * k + 1,
            excluded: [0, k, k + 1].into(),
        }
    }

    pub fn validate(&self) -> Result<(), PartitionError> {
        let bad = |m: String| Err(PartitionError::InvalidConstraint(m));
        match self {
            PartitionConstraint::Residues { modulus, .. } if *modulus < 2 => {
                bad(format!("modulus {modulus} must be at least 2"))
            }
            PartitionConstraint::GordonGap(k) | PartitionConstraint::MultiplicityWindow(k) if *k < 2 => {
                bad(format!("k = {k} must be at least 2"))
            }
            _ => Ok(()),
        }
    }

    /// Whether a complete partition satisfies the constraint.
    pub fn admits(&self, p: &Partition) -> bool {
        let mut prefix = Vec::with_capacity(p.len());
        for &part in p.parts() {
            if !self.extends(&prefix, part) {
                return false;
            }
            prefix.push(part);
        }
        true
    }

    /// Whether appending `part` (not larger than the last part) keeps the
    /// prefix admissible. Every constraint here is closed under taking
    /// prefixes, so this prunes enumeration exactly.
    fn extends(&self, prefix: &[u32], part: u32) -> bool {
        match self {
            PartitionConstraint::Unrestricted => true,
            PartitionConstraint::Residues { modulus, excluded } => !excluded.contains(&(part % modulus)),
            PartitionConstraint::GordonGap(k) => {
                let k = *k as usize;
                let len = prefix.len() + 1;
                len < k || prefix[len - k] >= part + 2
            }
            PartitionConstraint::MultiplicityWindow(k) => {
                let window = prefix.iter().filter(|&&q| q == part || q == part + 1).count();
                window + 1 < *k as usize
            }
            PartitionConstraint::AvoidMonomialIdeal(ideal) => {
                let m =
                    Monomial::from_exponents(prefix.iter().chain(std::iter::once(&part)).map(|&q| (VarId::y(q), 1)));
                !ideal.contains(&m)
            }
        }
    }
}

/// All partitions of `m` admitted by `constraint`, in descending
/// lexicographic order of their non-increasing part lists.
pub fn enumerate_partitions(m: usize, constraint: &PartitionConstraint) -> Result<Vec<Partition>, PartitionError> {
    let mut out = Vec::new();
    walk(m, constraint, |p| out.push(Partition { parts: p.to_vec() }))?;
    Ok(out)
}

/// Number of partitions [`enumerate_partitions`] would return, without
/// materializing them.
pub fn count_by_enumeration(m: usize, constraint: &PartitionConstraint) -> Result<u64, PartitionError> {
    let mut n = 0u64;
    walk(m, constraint, |_| n += 1)?;
    Ok(n)
}

fn walk(m: usize, constraint: &PartitionConstraint, mut visit: impl FnMut(&[u32])) -> Result<(), PartitionError> {
    if m > ENUMERATION_LIMIT {
        return Err(PartitionError::TooLarge {
            m,
            limit: ENUMERATION_LIMIT,
        });
    }
    constraint.validate()?;
    let mut prefix = Vec::new();
    recurse(m as u32, m as u32, constraint, &mut prefix, &mut visit);
    Ok(())
}

fn recurse(
    remaining: u32,
    max_part: u32,
    constraint: &PartitionConstraint,
    prefix: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(prefix);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if constraint.extends(prefix, part) {
            prefix.push(part);
            recurse(remaining - part, part, constraint, prefix, visit);
            prefix.pop();
        }
    }
}

/// `Σ_m #{partitions of m into parts with residue not excluded}·t^m`.
pub fn residue_series(modulus: u32, excluded: &BTreeSet<u32>, n: usize) -> TruncatedSeries {
    let modulus = modulus as usize;
    restricted_product(|i| !excluded.contains(&((i % modulus) as u32)), n)
}

/// Partitions of `m` into parts whose residue modulo `modulus` is not excluded.
pub fn count_residues(m: usize, modulus: u32, excluded: &BTreeSet<u32>) -> BigInt {
    residue_series(modulus, excluded, m).coeff(m).clone()
}

/// Generating series of partitions with `mult(v) + mult(v+1) ≤ k − 1` for
/// all `v`, which is the same as the gap condition `λ_j − λ_{j+k−1} ≥ 2`.
///
/// Part values are processed in increasing order. The state is the
/// multiplicity of the previous value; prefix sums over that state make
/// each value cost `O(k·n)`.
pub fn gordon_series(k: u32, n: usize) -> TruncatedSeries {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    // dp[c][w]: partitions using values < v, weight w, value v−1 used c times.
    let mut dp = vec![vec![BigInt::zero(); n + 1]; k];
    dp[0][0] = BigInt::from(1);
    for v in 1..=n {
        // cum[j][w] = Σ_{c ≤ j} dp[c][w]
        let mut cum = dp.clone();
        for j in 1..k {
            let (lo, hi) = cum.split_at_mut(j);
            for (a, b) in hi[0].iter_mut().zip(&lo[j - 1]) {
                *a += b;
            }
        }
        let mut next = vec![vec![BigInt::zero(); n + 1]; k];
        for c in 0..k {
            let shift = c * v;
            if shift > n {
                break;
            }
            for w in shift..=n {
                next[c][w] = cum[k - 1 - c][w - shift].clone();
            }
        }
        dp = next;
    }
    let mut total = vec![BigInt::zero(); n + 1];
    for row in &dp {
        for (t, x) in total.iter_mut().zip(row) {
            *t += x;
        }
    }
    TruncatedSeries::from_coefficients(total)
}

/// Partitions of `m` with `λ_j − λ_{j+k−1} ≥ 2`.
pub fn count_gordon(m: usize, k: u32) -> BigInt {
    gordon_series(k, m).coeff(m).clone()
}

/// Outcome of comparing both sides of Gordon's identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GordonReport {
    pub k: u32,
    #[serde(rename = "maxN")]
    pub max_n: usize,
    pub ok: bool,
    #[serde(rename = "firstFailure")]
    pub first_failure: Option<usize>,
}

/// Checks `A_k(m) = B_k(m)` for all `m ≤ max_n`.
pub fn gordon_check(k: u32, max_n: usize) -> GordonReport {
    let a = residue_series(2 * k + 1, &[0, k, k + 1].into(), max_n);
    let b = gordon_series(k, max_n);
    let first_failure = (0..=max_n).find(|&m| a.coeff(m) != b.coeff(m));
    GordonReport {
        k,
        max_n,
        ok: first_failure.is_none(),
        first_failure,
    }
}
