use std::collections::BTreeSet;
use std::fmt;

use crate::poly::{Monomial, VarId};

/// A monomial ideal stored by its minimal generating set.
///
/// No generator divides another, so two ideals are equal iff their
/// generator sets are equal. The zero ideal has no generators; the unit
/// ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: BTreeSet<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: [Monomial::one()].into(),
        }
    }

    /// Minimalizes an arbitrary generating set.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        MonomialIdeal {
            gens: kept.into_iter().collect(),
        }
    }

    pub fn generators(&self) -> &BTreeSet<Monomial> {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Whether `m` lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.gens.iter().flat_map(|g| g.variables()).collect()
    }

    /// `(I, m)`.
    pub fn sum(&self, m: &Monomial) -> MonomialIdeal {
        if self.contains(m) {
            return self.clone();
        }
        let mut gens: BTreeSet<Monomial> = self.gens.iter().filter(|g| !m.divides(g)).cloned().collect();
        gens.insert(m.clone());
        MonomialIdeal { gens }
    }

    /// `(I, J)`.
    pub fn sum_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().chain(other.gens.iter()).cloned())
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.gens
                .iter()
                .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides its argument")),
        )
    }

    /// Generators that mention only the listed variables.
    pub fn restrict(&self, keep: impl Fn(VarId) -> bool) -> MonomialIdeal {
        MonomialIdeal {
            gens: self.gens.iter().filter(|g| g.variables().all(&keep)).cloned().collect(),
        }
    }
}

impl FromIterator<Monomial> for MonomialIdeal {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        MonomialIdeal::new(iter)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u32) -> Monomial {
        Monomial::var(VarId::y(i))
    }

    /// `(y_i^2, y_i y_{i+1} : d ≤ i ≤ top)`, with `y_top y_{top+1}` omitted.
    fn double_point(d: u32, top: u32) -> MonomialIdeal {
        let mut gens = Vec::new();
        for i in d..=top {
            gens.push(y(i).mul(&y(i)));
            if i < top {
                gens.push(y(i).mul(&y(i + 1)));
            }
        }
        MonomialIdeal::new(gens)
    }

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new([y(1).mul(&y(2)), y(1), y(2).mul(&y(2)), y(1)]);
        assert_eq!(i, MonomialIdeal::new([y(1), y(2).mul(&y(2))]));
        assert_eq!(i.len(), 2);
    }

    #[test]
    fn sum_with_first_variable() {
        let lhs = double_point(1, 5).sum(&y(1));
        let mut rhs = double_point(2, 5);
        rhs = rhs.sum(&y(1));
        assert_eq!(lhs, rhs);
        assert!(lhs.generators().contains(&y(1)));
        assert!(!lhs.generators().contains(&y(1).mul(&y(2))));
    }

    #[test]
    fn colon_by_first_variable() {
        let lhs = double_point(1, 5).colon(&y(1));
        let rhs = double_point(3, 5).sum(&y(1)).sum(&y(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn colon_by_unit_and_unit_ideal() {
        let i = double_point(1, 4);
        assert_eq!(i.colon(&Monomial::one()), i);
        assert!(i.colon(&y(1).mul(&y(1))).is_unit());
        assert!(!i.contains(&y(1).mul(&y(3))));
        assert!(i.contains(&y(1).mul(&y(1)).mul(&y(4))));
    }
}
