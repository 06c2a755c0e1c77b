//! Exact computation of Hilbert–Poincaré series of focussed arc algebras.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: rational polynomials in jet variables, orders, the derivation.
//! * [`groebner`]: division, weight-truncated Buchberger, monomial ideals.
//! * [`partitions`]: constrained partition counts and standard-monomial series.
//! * [`qseries`]: truncated integer power series and product expansions.
//! * [`arc_ideals`]: jet equations, Bell polynomials, the series pipeline.
//! * [`verify`]: the executable identity checks shared by tests and the CLI.

pub mod arc_ideals;
pub mod error;
pub mod groebner;
pub mod partitions;
pub mod poly;
pub mod qseries;
pub mod verify;

pub use error::{GroebnerError, ParseError, PartitionError, PolyError, SeriesError, SpecError};
