//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate runs over arbitrary-precision
//! rationals kept in lowest terms with a positive denominator. Values render
//! canonically as `p/q` with the sign on the numerator, or as `p` when the
//! denominator is 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p/q"` or `"p"` into a rational, normalizing to lowest terms.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    let err = |reason: &str| Error::ParseRational {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| err("invalid integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| err("invalid numerator"))?;
            let d: BigInt = den.trim().parse().map_err(|_| err("invalid denominator"))?;
            if d.is_zero() {
                return Err(err("denominator is zero"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical rendering: `p/q` in lowest terms, `p` when the denominator is 1.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}
