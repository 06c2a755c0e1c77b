use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;

/// Weight-compatible monomial orders over the `(level, coord)` linearization
/// of variables.
///
/// Both orders compare weights first. They differ only in the tie-break:
///
/// * [`WeightRevLex`](MonomialOrder::WeightRevLex): `a > b` iff the last
///   nonzero entry of the exponent difference `a − b` is negative.
/// * [`WeightLex`](MonomialOrder::WeightLex): `a > b` iff the first nonzero
///   entry of `a − b` is positive.
///
/// On variables of level ≥ 1 both are global (well-founded) orders with `1`
/// as minimum. Level-0 variables have weight 0, so rings containing them
/// are ordered totally but not globally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    WeightRevLex,
    WeightLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.weight().cmp(&b.weight()) {
            Ordering::Equal => {}
            other => return other,
        }
        match self {
            MonomialOrder::WeightRevLex => revlex_tie(a, b),
            MonomialOrder::WeightLex => lex_tie(a, b),
        }
    }

    /// Tag used in cache files and command-line output.
    pub fn tag(self) -> &'static str {
        match self {
            MonomialOrder::WeightRevLex => "weight-revlex",
            MonomialOrder::WeightLex => "weight-lex",
        }
    }
}

fn revlex_tie(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (ea.len(), eb.len());
    while i > 0 && j > 0 {
        let (va, xa) = ea[i - 1];
        let (vb, xb) = eb[j - 1];
        if va == vb {
            if xa != xb {
                // The difference is positive at va iff xa > xb, which makes `a` smaller.
                return xb.cmp(&xa);
            }
            i -= 1;
            j -= 1;
        } else if va > vb {
            return Ordering::Less;
        } else {
            return Ordering::Greater;
        }
    }
    match (i, j) {
        (0, 0) => Ordering::Equal,
        (_, 0) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

fn lex_tie(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (0, 0);
    while i < ea.len() && j < eb.len() {
        let (va, xa) = ea[i];
        let (vb, xb) = eb[j];
        if va == vb {
            if xa != xb {
                return xa.cmp(&xb);
            }
            i += 1;
            j += 1;
        } else if va < vb {
            return Ordering::Greater;
        } else {
            return Ordering::Less;
        }
    }
    match (i < ea.len(), j < eb.len()) {
        (false, false) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        _ => Ordering::Less,
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weight-revlex" => Ok(MonomialOrder::WeightRevLex),
            "weight-lex" => Ok(MonomialOrder::WeightLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarId;
    use proptest::prelude::*;

    fn mono(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().map(|&(l, e)| (VarId::y(l), e)))
    }

    #[test]
    fn revlex_examples() {
        let ord = MonomialOrder::WeightRevLex;
        // y1^3 y2 vs y0 y1 y2^2
        assert_eq!(
            ord.compare(&mono(&[(1, 3), (2, 1)]), &mono(&[(0, 1), (1, 1), (2, 2)])),
            Ordering::Greater
        );
        assert_eq!(ord.compare(&mono(&[(1, 1)]), &mono(&[(1, 1)])), Ordering::Equal);
        // y2^2 vs y1 y3
        assert_eq!(
            ord.compare(&mono(&[(2, 2)]), &mono(&[(1, 1), (3, 1)])),
            Ordering::Greater
        );
        // heavier wins regardless of shape
        assert_eq!(ord.compare(&mono(&[(1, 1)]), &mono(&[(2, 1)])), Ordering::Less);
    }

    #[test]
    fn lex_prefers_low_levels() {
        let ord = MonomialOrder::WeightLex;
        assert_eq!(
            ord.compare(&mono(&[(1, 1), (3, 1)]), &mono(&[(2, 2)])),
            Ordering::Greater
        );
    }

    #[test]
    fn tags_round_trip() {
        for o in [MonomialOrder::WeightRevLex, MonomialOrder::WeightLex] {
            assert_eq!(o.tag().parse::<MonomialOrder>().unwrap(), o);
        }
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((1u32..=2, 1u32..=5, 0u32..=3), 0..5)
            .prop_map(|v| Monomial::from_exponents(v.into_iter().map(|(c, l, e)| (VarId::new(c, l), e))))
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(a in arb_mono(), b in arb_mono(), m in arb_mono()) {
            for ord in [MonomialOrder::WeightRevLex, MonomialOrder::WeightLex] {
                let ab = ord.compare(&a, &b);
                prop_assert_eq!(ab, ord.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ord.compare(&a.mul(&m), &b.mul(&m)), ab);
                prop_assert_ne!(ord.compare(&a.mul(&m), &a), Ordering::Less);
                if !m.is_one() {
                    prop_assert_eq!(ord.compare(&m, &Monomial::one()), Ordering::Greater);
                }
            }
        }

        #[test]
        fn transitive(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let ord = MonomialOrder::WeightRevLex;
            if ord.compare(&a, &b) != Ordering::Less && ord.compare(&b, &c) != Ordering::Less {
                prop_assert_ne!(ord.compare(&a, &c), Ordering::Less);
            }
        }
    }
}
