//! Exact-arithmetic engine for moment-functional (umbral) calculus.
//!
//! The crate is organised as a stack:
//!
//! * [`rat`] — arbitrary-precision rationals, p-adic valuations, congruences
//! * [`poly`] — sparse multivariate polynomials over the rationals
//! * [`series`] — truncated multivariate power series with polynomial coefficients
//! * [`umbra`] — umbrae as moment functionals and their evaluation map
//! * [`qalg`] — q-Pochhammer machinery and the normally-ordered q-algebra
//! * [`seq`] — classical number sequences and polynomial families, each with
//!   two independent computation routes
//! * [`catalog`] — the generating-function identity catalog and its verifier
//! * [`cong`] — 2-adic and p-adic congruence checks built on the above
//!
//! Everything is exact: no floating point anywhere, and series equality means
//! coefficient-by-coefficient equality of reduced rationals within the declared
//! truncation caps.

pub mod catalog;
pub mod cong;
pub mod poly;
pub mod qalg;
pub mod rat;
mod rng;
pub mod seq;
pub mod series;
pub mod umbra;

pub use poly::{Poly, PolyRing};
pub use rat::{rat, rat_int, Rat, Valuation};
pub use series::{Series, VarSpec};
pub use umbra::{ueval, Umbra, UmbraFamily};
