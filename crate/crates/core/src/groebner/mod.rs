//! Division, S-polynomials, weight-truncated Buchberger and monomial ideals.

mod buchberger;
mod division;
mod ideal;

pub use buchberger::{
    buchberger_truncated, buchberger_truncated_with_stats, leading_ideal, BuchbergerStats, TruncatedBasis,
};
pub use division::{divide, s_polynomial};
pub use ideal::MonomialIdeal;
