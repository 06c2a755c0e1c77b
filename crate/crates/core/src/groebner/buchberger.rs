use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::division::{reduce_monic, require_positive_levels, s_polynomial};
use super::MonomialIdeal;
use crate::error::GroebnerError;
use crate::poly::{parse_polynomial_with_order, Monomial, MonomialOrder, Polynomial};

/// A Gröbner basis valid up to a weight bound.
///
/// Elements are monic, weight-homogeneous of weight at most `weight_bound`,
/// fully inter-reduced and sorted ascending by leading monomial, so two
/// bases of the same ideal compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBasis {
    elements: Vec<Polynomial>,
    weight_bound: usize,
    order: MonomialOrder,
}

/// Counters describing one Buchberger run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_created: usize,
    pub pairs_over_bound: usize,
    pub pairs_coprime: usize,
    pub pairs_chain: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    #[serde(rename = "specHash")]
    spec_hash: String,
    #[serde(rename = "weightBound")]
    weight_bound: usize,
    order: String,
    elements: Vec<String>,
}

impl TruncatedBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        leading_ideal(self)
    }

    pub fn to_cache_json(&self, spec_hash: &str) -> String {
        let file = CacheFile {
            spec_hash: spec_hash.to_string(),
            weight_bound: self.weight_bound,
            order: self.order.tag().to_string(),
            elements: self.elements.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string_pretty(&file).expect("cache file serializes")
    }

    /// Reads a cache document back, returning the stored spec hash and the
    /// basis. Elements are re-validated against the basis invariants.
    pub fn from_cache_json(text: &str) -> Result<(String, TruncatedBasis), GroebnerError> {
        let bad = |m: String| GroebnerError::Cache(m);
        let file: CacheFile = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let order: MonomialOrder = file.order.parse().map_err(bad)?;
        let mut elements = Vec::with_capacity(file.elements.len());
        for s in &file.elements {
            let p = parse_polynomial_with_order(s, order).map_err(|e| bad(e.to_string()))?;
            let w = p
                .homogeneous_weight()
                .ok_or_else(|| bad(format!("element `{s}` is zero or inhomogeneous")))?;
            if w as usize > file.weight_bound || !p.leading_coefficient().is_some_and(num_traits::One::is_one) {
                return Err(bad(format!("element `{s}` violates the basis invariants")));
            }
            elements.push(p);
        }
        let sorted = elements.windows(2).all(|w| {
            order.compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap()) == Ordering::Less
        });
        if !sorted {
            return Err(bad("elements are not sorted by leading monomial".into()));
        }
        Ok((
            file.spec_hash,
            TruncatedBasis {
                elements,
                weight_bound: file.weight_bound,
                order,
            },
        ))
    }
}

/// The minimal generating set of the leading monomials of the basis.
pub fn leading_ideal(basis: &TruncatedBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.elements.iter().filter_map(|g| g.leading_monomial().cloned()))
}

/// See [`buchberger_truncated_with_stats`].
pub fn buchberger_truncated(
    gens: &[Polynomial],
    weight_bound: usize,
    order: MonomialOrder,
) -> Result<TruncatedBasis, GroebnerError> {
    buchberger_truncated_with_stats(gens, weight_bound, order).map(|(b, _)| b)
}

/// Buchberger's algorithm for weight-homogeneous generators, truncated at
/// `weight_bound`.
///
/// Work proceeds one weight at a time: first the input generators of that
/// weight, then the S-pairs whose lcm has that weight, ordered by lcm. A
/// pair is skipped when its leading monomials are coprime, or when some
/// basis element's leading monomial divides the lcm and both connecting
/// pairs are no longer pending. Pairs heavier than the bound are dropped,
/// which is sound because every S-polynomial is homogeneous of its lcm
/// weight.
pub fn buchberger_truncated_with_stats(
    gens: &[Polynomial],
    weight_bound: usize,
    order: MonomialOrder,
) -> Result<(TruncatedBasis, BuchbergerStats), GroebnerError> {
    let mut by_weight: BTreeMap<usize, Vec<Polynomial>> = BTreeMap::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        require_positive_levels(g)?;
        let w = g
            .homogeneous_weight()
            .ok_or_else(|| GroebnerError::NotHomogeneous(g.to_string()))?;
        if w == 0 {
            return Err(GroebnerError::WeightZero(g.to_string()));
        }
        if w as usize <= weight_bound {
            by_weight.entry(w as usize).or_default().push(g.with_order(order));
        }
    }
    for v in by_weight.values_mut() {
        v.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    }

    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: BTreeMap<usize, Vec<(usize, usize, Monomial)>> = BTreeMap::new();

    for w in 1..=weight_bound {
        for g in by_weight.remove(&w).unwrap_or_default() {
            let r = reduce_monic(&g, &basis);
            if r.is_zero() {
                stats.zero_reductions += 1;
            } else {
                insert(
                    &mut basis,
                    r.monic(),
                    weight_bound,
                    &mut pending,
                    &mut pairs,
                    &mut stats,
                );
            }
        }
        let mut batch = pairs.remove(&w).unwrap_or_default();
        batch.sort_by(|a, b| order.compare(&a.2, &b.2).then((a.0, a.1).cmp(&(b.0, b.1))));
        for (i, j, lcm) in batch {
            pending.remove(&(i, j));
            if chain_criterion(&basis, &pending, i, j, &lcm) {
                stats.pairs_chain += 1;
                continue;
            }
            stats.pairs_reduced += 1;
            let s = s_polynomial(&basis[i], &basis[j])?;
            let r = reduce_monic(&s, &basis);
            if r.is_zero() {
                stats.zero_reductions += 1;
            } else {
                // A reduced S-polynomial of weight w cannot share its lcm
                // weight with any new pair, so new pairs land in later batches.
                insert(
                    &mut basis,
                    r.monic(),
                    weight_bound,
                    &mut pending,
                    &mut pairs,
                    &mut stats,
                );
            }
        }
    }

    Ok((interreduce(basis, weight_bound, order), stats))
}

fn insert(
    basis: &mut Vec<Polynomial>,
    g: Polynomial,
    weight_bound: usize,
    pending: &mut HashSet<(usize, usize)>,
    pairs: &mut BTreeMap<usize, Vec<(usize, usize, Monomial)>>,
    stats: &mut BuchbergerStats,
) {
    let j = basis.len();
    let lm_j = g.leading_monomial().expect("nonzero").clone();
    for (i, f) in basis.iter().enumerate() {
        stats.pairs_created += 1;
        let lm_i = f.leading_monomial().expect("nonzero");
        let lcm = lm_i.lcm(&lm_j);
        if lcm.weight() as usize > weight_bound {
            stats.pairs_over_bound += 1;
        } else if lm_i.is_coprime(&lm_j) {
            stats.pairs_coprime += 1;
        } else {
            pending.insert((i, j));
            pairs.entry(lcm.weight() as usize).or_default().push((i, j, lcm));
        }
    }
    basis.push(g);
}

fn chain_criterion(
    basis: &[Polynomial],
    pending: &HashSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    basis.iter().enumerate().any(|(k, g)| {
        k != i
            && k != j
            && g.leading_monomial().is_some_and(|lm| lm.divides(lcm))
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn interreduce(basis: Vec<Polynomial>, weight_bound: usize, order: MonomialOrder) -> TruncatedBasis {
    let mut elements = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, p)| p.clone())
            .collect();
        // The leading monomials form a minimal set, so only tails change.
        let lt = Polynomial::from_sorted_terms(order, vec![g.terms()[0].clone()]);
        let tail = g - &lt;
        elements.push(&lt + &reduce_monic(&tail, &others));
    }
    elements.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    TruncatedBasis {
        elements,
        weight_bound,
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{divide, s_polynomial};
    use crate::poly::{parse_polynomial, Rational, VarId};
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn y(i: u32) -> Monomial {
        Monomial::var(VarId::y(i))
    }

    /// `2·B_{i,2}` written out by hand for the double point: the sum over
    /// `a + b = i`, `1 ≤ a < b` of `C(i, a)·y_a y_b`, plus `C(i, i/2)/2·y_{i/2}^2`.
    fn double_point_f(i: u32) -> Polynomial {
        use num_integer::binomial;
        let mut terms = Vec::new();
        for a in 1..i {
            let b = i - a;
            if a > b {
                break;
            }
            let c: u64 = binomial(u64::from(i), u64::from(a));
            let c = if a == b { c } else { 2 * c };
            terms.push((Rational::from_integer(c.into()), y(a).mul(&y(b))));
        }
        Polynomial::from_terms(MonomialOrder::WeightRevLex, terms)
    }

    #[test]
    fn hand_written_double_point_generators() {
        assert_eq!(double_point_f(2), p("2*y1^2"));
        assert_eq!(double_point_f(3), p("6*y1*y2"));
        assert_eq!(double_point_f(4), p("6*y2^2 + 8*y1*y3"));
    }

    #[test]
    fn double_point_basis_adds_nothing() {
        let gens: Vec<_> = (2..=12).map(double_point_f).collect();
        let (basis, stats) = buchberger_truncated_with_stats(&gens, 12, MonomialOrder::WeightRevLex).unwrap();
        let expected = MonomialIdeal::new((1..=6).flat_map(|q| {
            let mut v = vec![y(q).mul(&y(q))];
            if q + q < 12 {
                v.push(y(q).mul(&y(q + 1)));
            }
            v
        }));
        assert_eq!(basis.leading_ideal(), expected);
        assert_eq!(basis.len(), gens.len());
        assert_eq!(stats.zero_reductions, stats.pairs_reduced);
    }

    #[test]
    fn leading_ideal_to_weight_eight() {
        let gens: Vec<_> = (2..=8).map(double_point_f).collect();
        let basis = buchberger_truncated(&gens, 8, MonomialOrder::WeightRevLex).unwrap();
        let expected = MonomialIdeal::new([
            y(1).mul(&y(1)),
            y(1).mul(&y(2)),
            y(2).mul(&y(2)),
            y(2).mul(&y(3)),
            y(3).mul(&y(3)),
            y(3).mul(&y(4)),
            y(4).mul(&y(4)),
        ]);
        // y4^2 has weight 8, so it belongs to the truncated ideal as well.
        assert_eq!(basis.leading_ideal(), expected);
    }

    #[test]
    fn single_generator_and_empty_input() {
        let b = buchberger_truncated(&[p("y1")], 5, MonomialOrder::WeightRevLex).unwrap();
        assert_eq!(b.elements(), &[p("y1")]);
        let b = buchberger_truncated(&[], 5, MonomialOrder::WeightRevLex).unwrap();
        assert!(b.leading_ideal().is_empty());
        let b = buchberger_truncated(&[p("2*y1^2"), p("6*y1*y2")], 0, MonomialOrder::WeightRevLex).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn leading_monomials_of_given_generators() {
        let b = buchberger_truncated(&[p("2*y1^2"), p("6*y1*y2")], 3, MonomialOrder::WeightRevLex).unwrap();
        assert_eq!(
            b.leading_ideal(),
            MonomialIdeal::new([y(1).mul(&y(1)), y(1).mul(&y(2))])
        );
        assert_eq!(b.elements(), &[p("y1^2"), p("y1*y2")]);
    }

    #[test]
    fn rejects_bad_generators() {
        let o = MonomialOrder::WeightRevLex;
        assert!(matches!(
            buchberger_truncated(&[p("y1 + y2")], 4, o),
            Err(GroebnerError::NotHomogeneous(_))
        ));
        assert!(matches!(
            buchberger_truncated(&[p("y0*y1")], 4, o),
            Err(GroebnerError::LevelZeroVariable(_))
        ));
        assert!(matches!(
            buchberger_truncated(&[p("3")], 4, o),
            Err(GroebnerError::WeightZero(_))
        ));
    }

    #[test]
    fn basis_is_reduced_and_grows_when_needed() {
        // (x1_1*x2_1 - y2, y1^2) forces new elements.
        let gens = [p("x2_1*y1 - y2"), p("y1^2")];
        let b = buchberger_truncated(&gens, 6, MonomialOrder::WeightRevLex).unwrap();
        for (k, g) in b.elements().iter().enumerate() {
            assert!(g.leading_coefficient().unwrap() == &Rational::from_integer(1.into()));
            for (m, h) in b.elements().iter().enumerate() {
                if k != m {
                    let lm = h.leading_monomial().unwrap();
                    assert!(g.terms().iter().all(|t| !lm.divides(&t.monomial)));
                }
            }
        }
        assert_criterion(&b);
    }

    #[test]
    fn cache_round_trip() {
        let gens: Vec<_> = (2..=7).map(double_point_f).collect();
        let b = buchberger_truncated(&gens, 7, MonomialOrder::WeightRevLex).unwrap();
        let json = b.to_cache_json("abc");
        let (hash, back) = TruncatedBasis::from_cache_json(&json).unwrap();
        assert_eq!(hash, "abc");
        assert_eq!(back, b);
        assert_eq!(back.to_cache_json("abc"), json);
        assert!(TruncatedBasis::from_cache_json("{}").is_err());
        let broken = json.replace("y1^2", "2*y1^2");
        assert!(TruncatedBasis::from_cache_json(&broken).is_err());
    }

    #[test]
    fn extra_ideal_members_do_not_change_the_basis() {
        let gens: Vec<_> = (2..=10).map(double_point_f).collect();
        let a = buchberger_truncated(&gens, 10, MonomialOrder::WeightRevLex).unwrap();
        let mut more = gens.clone();
        // y_a·f_i + 3·y_b·f_j with a + i = b + j stays homogeneous and in the ideal.
        for i in 2..=6u32 {
            for j in 2..i {
                let (a, b) = (1, 1 + i - j);
                let lhs = double_point_f(i).mul_term(&Rational::from_integer(1.into()), &y(a));
                let rhs = double_point_f(j).mul_term(&Rational::from_integer(3.into()), &y(b));
                more.push(&lhs + &rhs);
            }
        }
        more.reverse();
        let b = buchberger_truncated(&more, 10, MonomialOrder::WeightRevLex).unwrap();
        assert_eq!(a.leading_ideal(), b.leading_ideal());
        assert_eq!(a, b);
    }

    fn assert_criterion(b: &TruncatedBasis) {
        let els = b.elements();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                let lcm = els[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(els[j].leading_monomial().unwrap());
                if lcm.weight() as usize <= b.weight_bound() {
                    let s = s_polynomial(&els[i], &els[j]).unwrap();
                    let (_, r) = divide(&s, els).unwrap();
                    assert!(r.is_zero(), "S({}, {}) leaves {}", els[i], els[j], r);
                }
            }
        }
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Polynomial>> {
        // Binomials and trinomials of weight 2..5 over three coordinates.
        let mono = |w: u32| {
            prop::collection::vec((1u32..=3, 1u32..=3), 1..4).prop_map(move |vs| {
                let mut exps = Vec::new();
                let mut acc = 0;
                for (c, l) in vs {
                    if acc + l <= w {
                        exps.push((VarId::new(c, l), 1));
                        acc += l;
                    }
                }
                if acc < w {
                    exps.push((VarId::new(1, 1), w - acc));
                }
                Monomial::from_exponents(exps)
            })
        };
        let poly = (2u32..=5).prop_flat_map(move |w| {
            prop::collection::vec((-3i64..=3, mono(w)), 1..4).prop_map(|ts| {
                Polynomial::from_terms(
                    MonomialOrder::WeightRevLex,
                    ts.into_iter().map(|(c, m)| (Rational::from_integer(c.into()), m)),
                )
            })
        });
        prop::collection::vec(poly, 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn emitted_basis_satisfies_criterion(gens in arb_gens()) {
            let b = buchberger_truncated(&gens, 7, MonomialOrder::WeightRevLex).unwrap();
            assert_criterion(&b);
            for g in &gens {
                if g.homogeneous_weight().is_some_and(|w| w <= 7) {
                    let (_, r) = divide(g, b.elements()).unwrap();
                    prop_assert!(r.is_zero());
                }
            }
        }
    }
}
