//! Truncated integer power series, product expansions and the double-point
//! recursions.

mod series;

pub use series::TruncatedSeries;
pub(crate) use series::{geometric_in_place, mul_truncated};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::SeriesError;
use crate::groebner::MonomialIdeal;
use crate::partitions::standard_monomial_series;
use crate::poly::{Monomial, VarId};

/// `∏ 1/(1−t^i)` over `1 ≤ i ≤ n` with `allowed(i)`, truncated at `n`.
pub fn restricted_product(allowed: impl Fn(usize) -> bool, n: usize) -> TruncatedSeries {
    let mut c = TruncatedSeries::one(n).into_coefficients();
    for i in (1..=n).filter(|&i| allowed(i)) {
        geometric_in_place(&mut c, i);
    }
    TruncatedSeries::from_coefficients(c)
}

/// The partition generating function `∏_{i≥1} 1/(1−t^i)`.
pub fn partition_series(n: usize) -> TruncatedSeries {
    restricted_product(|_| true, n)
}

/// Parts avoiding the residues `0, n, n+1` modulo `2n+1`.
pub fn nfold_product(n: usize, truncation: usize) -> TruncatedSeries {
    let m = 2 * n + 1;
    restricted_product(|i| !matches!(i % m, r if r == 0 || r == n || r == n + 1), truncation)
}

/// `Σ_j t^{j²} / ((1−t)…(1−t^j))`, truncated at `n`.
pub fn rr_sum_side(n: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(n).into_coefficients();
    let mut j = 0;
    while j * j <= n {
        let mut term = TruncatedSeries::monomial(j * j, BigInt::one(), n).into_coefficients();
        for i in 1..=j {
            geometric_in_place(&mut term, i);
        }
        for (a, b) in total.iter_mut().zip(term) {
            *a += b;
        }
        j += 1;
    }
    TruncatedSeries::from_coefficients(total)
}

/// The ideal `I_d = (y_i², y_i y_{i+1} : i ≥ d)` restricted to levels `≤ top`.
pub fn double_point_tail_ideal(d: u32, top: u32) -> MonomialIdeal {
    let y = |i| Monomial::var(VarId::y(i));
    let mut gens = Vec::new();
    for i in d..=top {
        gens.push(y(i).mul(&y(i)));
        if i < top {
            gens.push(y(i).mul(&y(i + 1)));
        }
    }
    MonomialIdeal::new(gens)
}

/// `h(d)`: the standard-monomial series of `I_d` in `y_d, y_{d+1}, …`.
pub fn h_series(d: u32, n: usize) -> TruncatedSeries {
    assert!(d >= 1, "h(d) is defined for d ≥ 1");
    let top = (n as u32).max(d);
    let weights: BTreeMap<VarId, u64> = (d..=top).map(|i| (VarId::y(i), u64::from(i))).collect();
    standard_monomial_series(&double_point_tail_ideal(d, top), &weights, n).expect("levels are positive")
}

/// The sequences `A_d`, `B_d` of the double-point recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndrewsBaxter {
    pub d_max: usize,
    pub truncation: usize,
    /// `a[d − 1] = A_d` for `1 ≤ d ≤ d_max`.
    pub a: Vec<TruncatedSeries>,
    /// `b[d − 1] = B_d` for `1 ≤ d ≤ d_max + 1`, with `B_1 := 0`.
    pub b: Vec<TruncatedSeries>,
    /// Whether `ord(B_d) ≥ d − 2` held for every computed `d ≥ 2`.
    pub order_bound_holds: bool,
    pub converged: bool,
    /// `A_{d_max}` when converged.
    pub limit: Option<TruncatedSeries>,
}

impl AndrewsBaxter {
    pub fn a(&self, d: usize) -> &TruncatedSeries {
        &self.a[d - 1]
    }

    pub fn b(&self, d: usize) -> &TruncatedSeries {
        &self.b[d - 1]
    }
}

/// Runs `A_1 = A_2 = 1`, `B_2 = 0`, `B_3 = t`, `A_d = A_{d−1} + B_d`,
/// `B_{d+1} = t^{d−1}·A_{d−1}`.
///
/// Convergence at truncation `N` is declared when `d_max − 2 > N`: every
/// later `B_d` then has order above `N`, so `A_{d_max}` is final.
pub fn andrews_baxter(d_max: usize, n: usize) -> Result<AndrewsBaxter, SeriesError> {
    if d_max < 2 {
        return Err(SeriesError::Malformed(format!("d_max = {d_max} must be at least 2")));
    }
    let one = TruncatedSeries::one(n);
    let mut a = vec![one.clone(), one];
    let mut b = vec![TruncatedSeries::zero(n), TruncatedSeries::zero(n)];
    for d in 3..=d_max + 1 {
        // B_d = t^{d−2}·A_{d−2}
        b.push(a[d - 3].shift(d - 2));
        if d <= d_max {
            a.push(&a[d - 2] + &b[d - 1]);
        }
    }
    let order_bound_holds = b
        .iter()
        .enumerate()
        .skip(1)
        // b[k] = B_{k+1}, whose order must be at least k − 1.
        .all(|(k, s)| s.order().is_none_or(|o| o + 1 >= k));
    let converged = d_max > n + 2;
    let limit = converged.then(|| a[d_max - 1].clone());
    Ok(AndrewsBaxter {
        d_max,
        truncation: n,
        a,
        b,
        order_bound_holds,
        converged,
        limit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    /// Partitions of `m` into parts from `allowed`, by the textbook
    /// coin-change recurrence.
    fn dp_count(m: usize, allowed: impl Fn(usize) -> bool) -> u64 {
        let mut ways = vec![0u64; m + 1];
        ways[0] = 1;
        for part in (1..=m).filter(|&p| allowed(p)) {
            for total in part..=m {
                ways[total] += ways[total - part];
            }
        }
        ways[m]
    }

    #[test]
    fn products_match_coin_change() {
        let rr = |i: usize| i % 5 == 1 || i % 5 == 4;
        let oracle: Vec<i64> = (0..=9).map(|m| dp_count(m, rr) as i64).collect();
        assert_eq!(oracle, vec![1, 1, 1, 1, 2, 2, 3, 3, 4, 5]);
        assert_eq!(restricted_product(rr, 9), s(&oracle));
        assert_eq!(nfold_product(2, 9), s(&oracle));
        let p: Vec<i64> = (0..=6).map(|m| dp_count(m, |_| true) as i64).collect();
        assert_eq!(partition_series(6), s(&p));
        assert_eq!(restricted_product(|_| false, 4), TruncatedSeries::one(4));
    }

    #[test]
    fn sum_side_small_cases() {
        assert_eq!(rr_sum_side(3), s(&[1, 1, 1, 1]));
        assert_eq!(rr_sum_side(0), s(&[1]));
        assert_eq!(rr_sum_side(200), restricted_product(|i| i % 5 == 1 || i % 5 == 4, 200));
    }

    #[test]
    fn h_series_examples() {
        assert_eq!(h_series(1, 9), s(&[1, 1, 1, 1, 2, 2, 3, 3, 4, 5]));
        // Standard monomials in y3, y4, y5 avoiding I_3: 1, y3, y4, y5.
        assert_eq!(h_series(3, 5), s(&[1, 0, 0, 1, 1, 1]));
        for d in 1..6 {
            assert_eq!(h_series(d, 12).coeff(0), &BigInt::one());
        }
    }

    #[test]
    fn recursion_first_terms() {
        let ab = andrews_baxter(6, 8).unwrap();
        assert_eq!(ab.a(3), &s(&[1, 1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(ab.a(4), &s(&[1, 1, 1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(ab.b(3), &s(&[0, 1, 0, 0, 0, 0, 0, 0, 0]));
        assert!(ab.b(2).is_zero());
        assert!(!ab.converged);
        assert!(ab.order_bound_holds);
        assert!(andrews_baxter(1, 5).is_err());
    }

    #[test]
    fn recursion_limit() {
        let ab = andrews_baxter(60, 50).unwrap();
        assert!(ab.converged);
        assert_eq!(ab.limit.unwrap(), nfold_product(2, 50));
    }
}
