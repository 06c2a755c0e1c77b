use num_traits::One;

use crate::error::{GroebnerError, PolyError};
use crate::poly::{Monomial, Polynomial, Rational, Term};

/// Rejects polynomials that mention a level-0 variable.
pub(crate) fn require_positive_levels(p: &Polynomial) -> Result<(), GroebnerError> {
    if p.min_level() == Some(0) {
        Err(GroebnerError::LevelZeroVariable(p.to_string()))
    } else {
        Ok(())
    }
}

pub(crate) fn same_order(f: &Polynomial, g: &Polynomial) -> Result<(), PolyError> {
    if f.order() == g.order() {
        Ok(())
    } else {
        Err(PolyError::OrderMismatch {
            left: f.order(),
            right: g.order(),
        })
    }
}

/// Multivariate division of `f` by the sequence `divisors`.
///
/// Returns `(quotients, remainder)` with `f = Σ q_i·g_i + r`, where no
/// monomial of `r` is divisible by any `lm(g_i)`. When several leading
/// monomials divide the current term, the first divisor in sequence order is
/// used. Zero divisors get a zero quotient and are otherwise ignored.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial), GroebnerError> {
    require_positive_levels(f)?;
    for g in divisors {
        require_positive_levels(g)?;
        same_order(f, g)?;
    }
    let order = f.order();
    let mut quotients: Vec<Vec<(Rational, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first().cloned() {
        match first_divisor(&lt.monomial, divisors) {
            Some((i, g)) => {
                let g_lt = g.leading_term()?;
                let c = &lt.coeff / &g_lt.coeff;
                let m = lt
                    .monomial
                    .checked_div(&g_lt.monomial)
                    .expect("divisor chosen by divisibility");
                p = p.merge(g, &-c.clone(), &m);
                quotients[i].push((c, m));
            }
            None => {
                remainder.push(lt);
                p = Polynomial::from_sorted_terms(order, p.into_terms().split_off(1));
            }
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(order, q))
        .collect();
    Ok((quotients, Polynomial::from_sorted_terms(order, remainder)))
}

fn first_divisor<'a>(m: &Monomial, divisors: &'a [Polynomial]) -> Option<(usize, &'a Polynomial)> {
    divisors
        .iter()
        .enumerate()
        .find(|(_, g)| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Remainder of full reduction against `basis`, which must consist of monic
/// nonzero polynomials. Skips the quotient bookkeeping of [`divide`].
pub(crate) fn reduce_monic(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let order = f.order();
    let mut remainder: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first().cloned() {
        match first_divisor(&lt.monomial, basis) {
            Some((_, g)) => {
                debug_assert!(g.leading_coefficient().is_some_and(One::is_one));
                let lm = g.leading_monomial().expect("nonzero basis element");
                let m = lt.monomial.checked_div(lm).expect("divisor chosen by divisibility");
                p = p.merge(g, &-lt.coeff, &m);
            }
            None => {
                remainder.push(lt);
                p = Polynomial::from_sorted_terms(order, p.into_terms().split_off(1));
            }
        }
    }
    Polynomial::from_sorted_terms(order, remainder)
}

/// `S(f, g) = (x^γ/lt(f))·f − (x^γ/lt(g))·g` with `x^γ = lcm(lm f, lm g)`.
///
/// Level-0 variables are allowed here; only the division routines need a
/// global order.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    same_order(f, g)?;
    let ft = f.leading_term()?;
    let gt = g.leading_term()?;
    let lcm = ft.monomial.lcm(&gt.monomial);
    let mf = lcm.checked_div(&ft.monomial).expect("lcm is a multiple");
    let mg = lcm.checked_div(&gt.monomial).expect("lcm is a multiple");
    let a = f.mul_term(&ft.coeff.recip(), &mf);
    Ok(a.merge(g, &-gt.coeff.recip(), &mg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, MonomialOrder, VarId};
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn exact_single_division() {
        let (q, r) = divide(&p("y1^2*y2"), &[p("y1^2")]).unwrap();
        assert_eq!(q, vec![p("y2")]);
        assert!(r.is_zero());
    }

    #[test]
    fn nothing_divides() {
        let (q, r) = divide(&p("y1*y3"), &[p("y1^2"), p("y1*y2")]).unwrap();
        assert!(q.iter().all(Polynomial::is_zero));
        assert_eq!(r, p("y1*y3"));
    }

    #[test]
    fn consecutive_pair_vanishes_for_double_point() {
        // f_2 = 2y1^2, f_3 = 6y1y2
        let s = s_polynomial(&p("2*y1^2"), &p("6*y1*y2")).unwrap();
        assert!(s.is_zero());
        let (_, r) = divide(&s, &[p("2*y1^2"), p("6*y1*y2"), p("6*y2^2 + 8*y1*y3")]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn s_polynomial_examples() {
        let s = s_polynomial(&p("6*y1*y2"), &p("6*y2^2 + 8*y1*y3")).unwrap();
        assert_eq!(s, p("-4/3*y1^2*y3"));
        let f = p("y2^2 + y1*y3");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(MonomialOrder::WeightRevLex)).is_err());
    }

    #[test]
    fn level_zero_rejected() {
        assert!(matches!(
            divide(&p("y0*y1"), &[p("y1")]),
            Err(GroebnerError::LevelZeroVariable(_))
        ));
        assert!(divide(&p("y1"), &[p("y0")]).is_err());
    }

    fn arb_homogeneous(weight: u32) -> impl Strategy<Value = Polynomial> {
        // Monomials of a fixed weight over y1..y4 and x2_1..x2_4.
        let mono = prop::collection::vec((1u32..=2, 1u32..=4), 1..5).prop_map(move |vs| {
            let mut exps = Vec::new();
            let mut w = 0;
            for (c, l) in vs {
                if w + l <= weight {
                    exps.push((VarId::new(c, l), 1));
                    w += l;
                }
            }
            if w < weight {
                exps.push((VarId::new(1, 1), weight - w));
            }
            Monomial::from_exponents(exps)
        });
        prop::collection::vec((-4i64..=4, mono), 1..5).prop_map(|ts| {
            Polynomial::from_terms(
                MonomialOrder::WeightRevLex,
                ts.into_iter().map(|(c, m)| (Rational::from_integer(c.into()), m)),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn division_reassembles(
            f in arb_homogeneous(6),
            gs in prop::collection::vec((2u32..=4).prop_flat_map(arb_homogeneous), 1..4),
        ) {
            let (q, r) = divide(&f, &gs).unwrap();
            let mut total = r.clone();
            for (qi, gi) in q.iter().zip(&gs) {
                let prod = qi * gi;
                if let (Some(a), Some(b)) = (prod.leading_monomial(), f.leading_monomial()) {
                    prop_assert_ne!(f.order().compare(a, b), std::cmp::Ordering::Greater);
                }
                total = &total + &prod;
            }
            prop_assert_eq!(total, f);
            for t in r.terms() {
                prop_assert!(gs.iter().all(|g| !g.leading_monomial().is_some_and(|lm| lm.divides(&t.monomial))));
            }
        }
    }
}
