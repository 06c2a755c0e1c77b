//! Sparse polynomials over `Q` in leveled jet variables `x_j^{(i)}`.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod var;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, parse_polynomial_with_order};
pub use polynomial::{Polynomial, Term};
pub use var::VarId;

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;
