use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, VarId};
use crate::error::PolyError;

/// A nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// Sparse polynomial over `Q` in jet variables.
///
/// Terms are kept strictly descending under the polynomial's
/// [`MonomialOrder`], with distinct monomials and no zero coefficients.
/// Binary operators panic when the operands carry different orders; the
/// `checked_*` methods report that as [`PolyError::OrderMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(order: MonomialOrder) -> Self {
        Polynomial {
            order,
            terms: Vec::new(),
        }
    }

    pub fn one(order: MonomialOrder) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: MonomialOrder) -> Self {
        Self::term(c, Monomial::one(), order)
    }

    pub fn var(v: VarId, order: MonomialOrder) -> Self {
        Self::term(Rational::one(), Monomial::var(v), order)
    }

    pub fn term(c: Rational, m: Monomial, order: MonomialOrder) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![Term::new(c, m)] };
        Polynomial { order, terms }
    }

    /// Normalizes an arbitrary bag of terms: merges equal monomials, drops
    /// zeros and sorts descending.
    pub fn from_terms<I>(order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial { order, terms }
    }

    /// Wraps terms that are already strictly descending and zero-free.
    pub(crate) fn from_sorted_terms(order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { order, terms }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn leading_term(&self) -> Result<&Term, PolyError> {
        self.terms.first().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.monomial == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial { order, terms }
    }

    fn check_order(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(PolyError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        Ok(self.merge(other, &Rational::one(), &Monomial::one()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        Ok(self.merge(other, &-Rational::one(), &Monomial::one()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.order));
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        // Multiplying a sorted polynomial by one term keeps it sorted, so
        // accumulate by merging.
        let mut acc = Polynomial::zero(self.order);
        for t in &short.terms {
            acc = acc.merge(long, &t.coeff, &t.monomial);
        }
        Ok(acc)
    }

    /// `self + c·m·other`, by a linear merge. Orders must already agree.
    pub(crate) fn merge(&self, other: &Polynomial, c: &Rational, m: &Monomial) -> Polynomial {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| Term::new(c * &t.coeff, m.mul(&t.monomial)))
            .peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.compare(&x.monomial, &y.monomial),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let t = b.next().unwrap();
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = &x.coeff + y.coeff;
                    if !s.is_zero() {
                        out.push(Term::new(s, y.monomial));
                    }
                }
            }
        }
        Polynomial { order: ord, terms: out }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.clone()))
                .collect(),
        }
    }

    /// `c·m·self`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.mul(m)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Scales to the primitive integer polynomial with positive leading
    /// coefficient. Used only for presentation.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        let Some(lc) = self.leading_coefficient() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
            num = num.gcd(t.coeff.numer());
        }
        let mut factor = Rational::new(den, num);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Applies the derivation `D` with `D(x_j^{(i)}) = x_j^{(i+1)}`.
    pub fn derive(&self) -> Polynomial {
        let mut out = Vec::new();
        for t in &self.terms {
            for &(v, e) in t.monomial.exponents() {
                let lowered = t
                    .monomial
                    .checked_div(&Monomial::var(v))
                    .expect("variable occurs in its own monomial");
                out.push((
                    &t.coeff * Rational::from_integer(e.into()),
                    lowered.mul(&Monomial::var(v.raised())),
                ));
            }
        }
        Polynomial::from_terms(self.order, out)
    }

    /// Deletes every term that contains one of the listed variables.
    pub fn substitute_zero(&self, vars: &BTreeSet<VarId>) -> Polynomial {
        self.retain_terms(|m| !m.variables().any(|v| vars.contains(&v)))
    }

    /// Sets all level-0 variables to zero (focussing at the origin).
    pub fn substitute_level_zero(&self) -> Polynomial {
        self.retain_terms(|m| m.variables().all(|v| v.level() > 0))
    }

    fn retain_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            order: self.order,
            terms: self.terms.iter().filter(|t| keep(&t.monomial)).cloned().collect(),
        }
    }

    /// The common weight of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let w = self.terms.first()?.monomial.weight();
        self.terms.iter().all(|t| t.monomial.weight() == w).then_some(w)
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    /// Level-0 variables sort below `1`, so the constant term need not be last.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|t| t.monomial.variables()).collect()
    }

    pub fn min_level(&self) -> Option<u32> {
        self.terms.iter().filter_map(|t| t.monomial.min_level()).min()
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: descending terms, reduced coefficients, coefficient
    /// 1 omitted, factors in variable order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{abs}*{}", t.monomial)?;
            }
        }
        Ok(())
    }
}

fn expect_same(a: &Polynomial, b: &Polynomial) {
    if let Err(e) = a.check_order(b) {
        panic!("{e}");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.merge(rhs, &Rational::one(), &Monomial::one())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.merge(rhs, &-Rational::one(), &Monomial::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.checked_mul(rhs).expect("orders checked")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("y1 + y2") + &p("-y1"), p("y2"));
        assert_eq!(&p("y1") * &p("y1"), p("y1^2"));
        assert_eq!(p("3*y1*y2").scale(&q(2, 3)), p("2*y1*y2"));
        assert_eq!(
            &p("y1 + y2") - &p("y1 + y2"),
            Polynomial::zero(MonomialOrder::WeightRevLex)
        );
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = p("y1");
        let b = a.with_order(MonomialOrder::WeightLex);
        assert!(matches!(a.checked_add(&b), Err(PolyError::OrderMismatch { .. })));
        assert!(a.checked_mul(&b).is_err());
        assert!(a.checked_sub(&b).is_err());
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(p("y0^4").derive(), p("4*y0^3*y1"));
        assert!(p("1").derive().is_zero());
        assert_eq!(p("y1*y2").derive(), p("y2^2 + y1*y3"));
        assert_eq!(p("x2_3").derive(), p("x2_4"));
    }

    #[test]
    fn substitution_examples() {
        let y0: BTreeSet<VarId> = [VarId::y(0)].into();
        assert_eq!(p("y1^2").substitute_zero(&y0), p("y1^2"));
        let f4 = p("24*y1^4 + 144*y0*y1^2*y2 + 36*y0^2*y2^2 + 48*y0^2*y1*y3 + 4*y0^3*y4");
        assert_eq!(f4.substitute_zero(&y0), p("24*y1^4"));
        assert_eq!(f4.substitute_level_zero(), p("24*y1^4"));
        let f3 = p("24*y0*y1^3 + 36*y0^2*y1*y2 + 4*y0^3*y3");
        assert!(f3.substitute_zero(&y0).is_zero());
    }

    #[test]
    fn leading_terms() {
        let f5 = p("240*y1^3*y2 + 360*y0*y1*y2^2 + 240*y0*y1^2*y3 + 120*y0^2*y2*y3 + 60*y0^2*y1*y4 + 4*y0^3*y5");
        let lt = f5.leading_term().unwrap();
        assert_eq!(lt.coeff, q(240, 1));
        assert_eq!(lt.monomial.to_string(), "y1^3*y2");
        // 2*B_{4,2}
        let lt = p("8*y1*y3 + 6*y2^2").leading_term().unwrap().clone();
        assert_eq!(lt.coeff, q(6, 1));
        assert_eq!(lt.monomial.to_string(), "y2^2");
        assert_eq!(
            Polynomial::zero(MonomialOrder::WeightRevLex).leading_term(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("y2^2 + y1*y3").homogeneous_weight(), Some(4));
        assert_eq!(p("y2 + y1").homogeneous_weight(), None);
        assert!(p("0").is_weight_homogeneous());
    }

    #[test]
    fn primitive_form() {
        assert_eq!(p("-4/3*y1^2*y3 + 2/3*y2").primitive(), p("2*y1^2*y3 - y2"));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            -5i64..=5,
            1i64..=3,
            prop::collection::vec((1u32..=2, 0u32..=3, 1u32..=2), 0..3),
        );
        prop::collection::vec(term, 0..5).prop_map(|ts| {
            Polynomial::from_terms(
                MonomialOrder::WeightRevLex,
                ts.into_iter().map(|(n, d, vs)| {
                    (
                        q(n, d),
                        Monomial::from_exponents(vs.into_iter().map(|(c, l, e)| (VarId::new(c, l), e))),
                    )
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derive();
            let rhs = &(&a.derive() * &b) + &(&a * &b.derive());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn derivation_raises_weight(a in arb_poly()) {
            if let Some(w) = a.homogeneous_weight() {
                let d = a.derive();
                prop_assert!(d.terms().iter().all(|t| t.monomial.weight() == w + 1));
            }
        }
    }
}
