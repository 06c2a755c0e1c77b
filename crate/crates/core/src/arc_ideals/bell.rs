use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Term, VarId};

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn int(c: BigInt) -> Rational {
    Rational::from_integer(c)
}

/// The partial Bell polynomial `B_{i,j}` in `y_1, …, y_{i−j+1}`.
///
/// The coefficient of `∏ y_m^{k_m}` is the number of set partitions of an
/// `i`-set with `k_m` blocks of size `m`, `i!/∏((m!)^{k_m}·k_m!)`.
/// `B_{0,0} = 1` and `B_{i,j} = 0` whenever exactly one of `i`, `j` is zero
/// or `j > i`.
pub fn bell(i: u32, j: u32) -> Polynomial {
    let order = MonomialOrder::WeightRevLex;
    if i == 0 || j == 0 {
        return if i == j {
            Polynomial::one(order)
        } else {
            Polynomial::zero(order)
        };
    }
    let fi = factorial(u64::from(i));
    let mut terms = Vec::new();
    let mut parts = Vec::new();
    parts_into(i, j, i, &mut parts, &mut |p| {
        let mut den = BigInt::one();
        let mut exps = Vec::new();
        let mut k = 0;
        while k < p.len() {
            let m = p[k];
            let run = p[k..].iter().take_while(|&&x| x == m).count();
            den *= factorial(u64::from(m)).pow(run as u32) * factorial(run as u64);
            exps.push((VarId::y(m), run as u32));
            k += run;
        }
        terms.push((int(&fi / den), Monomial::from_exponents(exps)));
    });
    Polynomial::from_terms(order, terms)
}

/// Partitions of `total` into exactly `count` parts, each at most `max`,
/// listed non-increasing.
fn parts_into(total: u32, count: u32, max: u32, acc: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if count == 0 {
        if total == 0 {
            visit(acc);
        }
        return;
    }
    // The remaining count − 1 parts need at least 1 each.
    let hi = max.min(total.saturating_sub(count - 1));
    let lo = total.div_ceil(count);
    for part in (lo..=hi).rev() {
        acc.push(part);
        parts_into(total - part, count - 1, part, acc, visit);
        acc.pop();
    }
}

/// `F_i = D^i(y_0^n)`, computed by iterating the derivation and checked
/// against `Σ_{j<n} (n!/j!)·B_{i,n−j}·y_0^j`. Panics if the two disagree.
pub fn big_f_generator(n: u32, i: u32) -> Polynomial {
    big_f_sequence(n, i).pop().expect("sequence includes F_i")
}

/// `F_0, …, F_upto`, each checked against the Bell closed form.
pub fn big_f_sequence(n: u32, upto: u32) -> Vec<Polynomial> {
    let order = MonomialOrder::WeightRevLex;
    let mut f = Polynomial::term(Rational::one(), Monomial::pow(VarId::y(0), n), order);
    let mut out = Vec::with_capacity(upto as usize + 1);
    for i in 0..=upto {
        if i > 0 {
            f = f.derive();
        }
        let closed = big_f_closed_form(n, i);
        assert_eq!(f, closed, "D^{i}(y0^{n}) disagrees with the Bell closed form");
        out.push(f.clone());
    }
    out
}

/// `Σ_{j=0}^{n−1} (n!/j!)·B_{i,n−j}·y_0^j` for `i ≥ 1`, and `y_0^n` for `i = 0`.
pub fn big_f_closed_form(n: u32, i: u32) -> Polynomial {
    let order = MonomialOrder::WeightRevLex;
    if i == 0 {
        return Polynomial::term(Rational::one(), Monomial::pow(VarId::y(0), n), order);
    }
    let nf = factorial(u64::from(n));
    let mut acc = Polynomial::zero(order);
    for j in 0..n {
        let c = int(&nf / factorial(u64::from(j)));
        let y0j = Monomial::pow(VarId::y(0), j);
        acc = &acc + &bell(i, n - j).mul_term(&c, &y0j);
    }
    acc
}

/// `f_i = F_i|_{y_0 = 0} = n!·B_{i,n}`, zero for `i < n`.
pub fn f_generator(n: u32, i: u32) -> Polynomial {
    if i < n {
        return Polynomial::zero(MonomialOrder::WeightRevLex);
    }
    bell(i, n).scale(&int(factorial(u64::from(n))))
}

/// `f_from, …, f_to`.
pub fn f_sequence(n: u32, from: u32, to: u32) -> Vec<Polynomial> {
    (from..=to).map(|i| f_generator(n, i)).collect()
}

/// `C(n,r)·i!/((q!)^{n−r}·((q+1)!)^r) · y_q^{n−r}·y_{q+1}^r` with `i = qn + r`.
pub fn leading_term_closed_form(n: u32, i: u32) -> Term {
    let (q, r) = (i / n, i % n);
    let num = BigInt::from(binomial(u64::from(n), u64::from(r))) * factorial(u64::from(i));
    let den = factorial(u64::from(q)).pow(n - r) * factorial(u64::from(q) + 1).pow(r);
    Term::new(
        Rational::new(num, den),
        Monomial::from_exponents([(VarId::y(q), n - r), (VarId::y(q + 1), r)]),
    )
}
