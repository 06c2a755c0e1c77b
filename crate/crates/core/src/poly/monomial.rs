use std::fmt;

use super::VarId;

/// A power product of jet variables.
///
/// Stored sparsely as `(variable, exponent)` pairs sorted by [`VarId`]
/// ascending, with no zero exponents. The empty product is the monomial `1`.
/// The derived `Ord` is structural (used for map keys and canonical sets);
/// monomial orders live in [`MonomialOrder`](super::MonomialOrder).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    weight: u64,
    degree: u64,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::pow(v, 1)
    }

    pub fn pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(v, e)],
            weight: v.weight() * u64::from(e),
            degree: u64::from(e),
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_exponents<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Self::from_sorted(merged)
    }

    fn from_sorted(exps: Vec<(VarId, u32)>) -> Self {
        let weight = exps.iter().map(|&(v, e)| v.weight() * u64::from(e)).sum();
        let degree = exps.iter().map(|&(_, e)| u64::from(e)).sum();
        Monomial { exps, weight, degree }
    }

    /// `Σ level(v)·e(v)`.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// `Σ e(v)`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Sparse exponent pairs, sorted by variable.
    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn min_level(&self) -> Option<u32> {
        self.exps.iter().map(|&(v, _)| v.level()).min()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            if a == b {
                out.push((a, ea + eb));
                i += 1;
                j += 1;
            } else if a < b {
                out.push((a, ea));
                i += 1;
            } else {
                out.push((b, eb));
                j += 1;
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial {
            exps: out,
            weight: self.weight + other.weight,
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.weight > other.weight {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        other.checked_div(self)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut sub = 0;
            if j < other.exps.len() && other.exps[j].0 == v {
                sub = other.exps[j].1;
                j += 1;
            }
            if e > sub {
                out.push((v, e - sub));
            }
        }
        Some(Monomial {
            exps: out,
            weight: self.weight - other.weight,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::min)
    }

    fn merge_with(&self, other: &Monomial, pick: fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (v, e) = match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => break,
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    i += 1;
                    j += 1;
                    (a, pick(ea, eb))
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    i += 1;
                    (a, pick(ea, 0))
                }
                (Some(_), Some(&(b, eb))) | (None, Some(&(b, eb))) => {
                    j += 1;
                    (b, pick(0, eb))
                }
                (Some(&(a, ea)), None) => {
                    i += 1;
                    (a, pick(ea, 0))
                }
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial::from_sorted(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let a = self.exps[i].0;
            let b = other.exps[j].0;
            if a == b {
                return false;
            } else if a < b {
                i += 1;
            } else {
                j += 1;
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u32) -> VarId {
        VarId::y(i)
    }

    #[test]
    fn weight_and_degree() {
        let m = Monomial::from_exponents([(y(2), 3), (y(5), 1)]);
        assert_eq!(m.weight(), 11);
        assert_eq!(m.degree(), 4);
    }

    #[test]
    fn merges_repeated_variables_and_drops_zeros() {
        let m = Monomial::from_exponents([(y(1), 1), (y(3), 0), (y(1), 2)]);
        assert_eq!(m, Monomial::pow(y(1), 3));
    }

    #[test]
    fn divisibility_lcm_gcd() {
        let a = Monomial::from_exponents([(y(1), 2), (y(2), 1)]);
        let b = Monomial::from_exponents([(y(2), 2), (y(3), 1)]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents([(y(1), 2), (y(2), 2), (y(3), 1)]));
        assert_eq!(a.gcd(&b), Monomial::var(y(2)));
        assert!(a.divides(&a.lcm(&b)));
        assert!(!a.divides(&b));
        assert_eq!(
            a.lcm(&b).checked_div(&a),
            Some(Monomial::from_exponents([(y(2), 1), (y(3), 1)]))
        );
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(y(1)).is_coprime(&Monomial::var(y(4))));
    }

    #[test]
    fn display() {
        let m = Monomial::from_exponents([(y(0), 1), (y(1), 2), (VarId::new(2, 1), 1)]);
        assert_eq!(m.to_string(), "y0*y1^2*x2_1");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
