//! Exact arithmetic: arbitrary-precision rationals, sparse polynomials in t,
//! and truncated Laurent series with sound truncation tracking.

pub mod laurent;
pub mod poly;
pub mod rational;

pub use laurent::LaurentSeries;
pub use poly::Poly;
pub use rational::{parse_rational, rat, rat_int, render_rational, Rational};
