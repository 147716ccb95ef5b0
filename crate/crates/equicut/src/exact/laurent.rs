//! Truncated Laurent series in t over exact rationals.
//!
//! A series carries an explicit truncation order: coefficients at exponents
//! `>= truncation_order` are unknown, coefficients below the valuation are
//! exactly zero, and everything in between is stored exactly. Every operation
//! computes the tightest truncation order that is still sound, so no unknown
//! coefficient is ever reported as known.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::rational::{render_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    /// Nonzero coefficients, keyed by exponent; all keys lie in
    /// `[valuation, truncation)`.
    coeffs: BTreeMap<i64, Rational>,
    /// Exponents `>= truncation` are unknown.
    truncation: i64,
}

impl LaurentSeries {
    /// Series with the given terms, known up to (excluding) `truncation`.
    /// Terms at or past the truncation order are discarded.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (i64, Rational)>,
        truncation: i64,
    ) -> Self {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp >= truncation || c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(exp).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&exp);
            }
        }
        LaurentSeries { coeffs, truncation }
    }

    /// The zero series: every coefficient below `truncation` is known zero.
    pub fn zero(truncation: i64) -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
            truncation,
        }
    }

    pub fn one(truncation: i64) -> Self {
        Self::monomial(0, Rational::one(), truncation)
    }

    pub fn monomial(exp: i64, c: Rational, truncation: i64) -> Self {
        Self::from_terms([(exp, c)], truncation)
    }

    /// Lowest exponent carrying a nonzero known coefficient. For a series
    /// that is zero up to truncation this equals the truncation order.
    pub fn valuation(&self) -> i64 {
        self.coeffs
            .keys()
            .next()
            .copied()
            .unwrap_or(self.truncation)
    }

    pub fn truncation_order(&self) -> i64 {
        self.truncation
    }

    pub fn is_zero_up_to_truncation(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Known coefficient at `exp`. Panics if `exp` is past the truncation
    /// order; use `residue` for the checked t^{-1} access.
    pub fn coeff(&self, exp: i64) -> Rational {
        assert!(
            exp < self.truncation,
            "coefficient of t^{exp} is beyond the truncation order {}",
            self.truncation
        );
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Exponential series of `c*t`: sum of `c^k t^k / k!` for `k < order`.
    pub fn exp(c: &Rational, order: i64) -> Self {
        assert!(order >= 1, "exponential needs order >= 1");
        let mut terms = Vec::new();
        let mut term = Rational::one();
        for k in 0..order {
            if k > 0 {
                term = term * c / Rational::from_integer(BigInt::from(k));
            }
            terms.push((k, term.clone()));
        }
        Self::from_terms(terms, order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.truncation.min(other.truncation);
        Self::from_terms(
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(&e, c)| (e, c.clone())),
            trunc,
        )
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            truncation: self.truncation,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.truncation);
        }
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * s)).collect(),
            truncation: self.truncation,
        }
    }

    /// Multiply by `t^k`; the known window shifts along.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
            truncation: self.truncation + k,
        }
    }

    /// Product. A coefficient of the product at exponent e is known only if
    /// every contributing pair is known, which bounds the result's window at
    /// `min(val(a) + trunc(b), val(b) + trunc(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = (self.valuation() + other.truncation)
            .min(other.valuation() + self.truncation);
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e >= trunc {
                    break; // keys ascend, later eb only larger
                }
                let entry = out.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
        }
        LaurentSeries {
            coeffs: out,
            truncation: trunc,
        }
    }

    /// Multiplicative inverse. A series with valuation v and m known
    /// coefficients determines exactly m coefficients of its inverse, so the
    /// result has valuation -v and truncation order `trunc - 2v`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero_up_to_truncation() {
            return Err(Error::NonInvertible);
        }
        let v = self.valuation();
        let known = self.truncation - v;
        let lead = self.coeff(v);
        let lead_inv = Rational::one() / &lead;

        // Normalized tail u with u_0 = 1: self = lead * t^v * u.
        let u: Vec<Rational> = (0..known).map(|k| self.coeff(v + k) / &lead).collect();
        // w = 1/u via w_0 = 1, w_n = -sum_{k=1..n} u_k w_{n-k}.
        let mut w: Vec<Rational> = Vec::with_capacity(known as usize);
        w.push(Rational::one());
        for n in 1..known as usize {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !u[k].is_zero() && !w[n - k].is_zero() {
                    acc += &u[k] * &w[n - k];
                }
            }
            w.push(-acc);
        }

        Ok(Self::from_terms(
            w.into_iter()
                .enumerate()
                .map(|(k, c)| (k as i64 - v, c * &lead_inv)),
            self.truncation - 2 * v,
        ))
    }

    /// Coefficient of t^{-1}. Errors if the truncation window does not reach
    /// past exponent -1.
    pub fn residue(&self) -> Result<Rational> {
        if self.truncation <= -1 {
            return Err(Error::InsufficientPrecision {
                exponent: -1,
                truncation: self.truncation,
            });
        }
        Ok(self.coeffs.get(&-1).cloned().unwrap_or_else(Rational::zero))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&exp, c) in &self.coeffs {
            let (sign, abs) = if c < &Rational::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let one = abs.is_one();
            match (exp, one) {
                (0, _) => write!(f, "{}", render_rational(&abs))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", render_rational(&abs))?,
                (_, true) => write!(f, "t^{}", exp)?,
                (_, false) => write!(f, "{}*t^{}", render_rational(&abs), exp)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.truncation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn one_minus_exp_neg_t(order: i64) -> LaurentSeries {
        LaurentSeries::one(order).sub(&LaurentSeries::exp(&rat_int(-1), order))
    }

    #[test]
    fn exp_examples() {
        // c = 0: the constant series 1
        let e = LaurentSeries::exp(&rat_int(0), 4);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(0));
        assert_eq!(e.valuation(), 0);

        // c = -1: 1 - t + t^2/2
        let e = LaurentSeries::exp(&rat_int(-1), 3);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(-1));
        assert_eq!(e.coeff(2), rat(1, 2));

        // c = 2: 1 + 2t + 2t^2
        let e = LaurentSeries::exp(&rat_int(2), 3);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(2));
        assert_eq!(e.coeff(2), rat_int(2));
    }

    #[test]
    fn invert_monomial_and_constant() {
        let t = LaurentSeries::monomial(1, rat_int(1), 6);
        let inv = t.invert().unwrap();
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.coeff(-1), rat_int(1));

        let two = LaurentSeries::monomial(0, rat_int(2), 4);
        let half = two.invert().unwrap();
        assert_eq!(half.coeff(0), rat(1, 2));
        assert_eq!(half.coeff(3), rat_int(0));
    }

    #[test]
    fn invert_one_minus_exp() {
        // Oracle: multiply the inverse back and check the product is 1 on the
        // whole known window. The frozen low-order coefficients follow.
        let s = one_minus_exp_neg_t(8);
        let inv = s.invert().unwrap();
        let prod = s.mul(&inv);
        assert_eq!(prod.coeff(0), rat_int(1));
        for e in prod.valuation()..prod.truncation_order() {
            if e != 0 {
                assert_eq!(prod.coeff(e), rat_int(0), "t^{e} coefficient");
            }
        }
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.coeff(-1), rat_int(1));
        assert_eq!(inv.coeff(0), rat(1, 2));
        assert_eq!(inv.coeff(1), rat(1, 12));
        assert_eq!(inv.coeff(2), rat_int(0));
    }

    #[test]
    fn invert_zero_series_fails() {
        assert!(matches!(
            LaurentSeries::zero(5).invert(),
            Err(Error::NonInvertible)
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let t = LaurentSeries::monomial(1, rat_int(1), 6);
        let t_inv = LaurentSeries::monomial(-1, rat_int(1), 6);
        let prod = t_inv.mul(&t);
        assert_eq!(prod.coeff(0), rat_int(1));

        // (t^{-1} + 1) + (-t^{-1}) = 1
        let a = LaurentSeries::from_terms([(-1, rat_int(1)), (0, rat_int(1))], 4);
        let b = LaurentSeries::monomial(-1, rat_int(-1), 4);
        let sum = a.add(&b);
        assert_eq!(sum.valuation(), 0);
        assert_eq!(sum.coeff(0), rat_int(1));
    }

    #[test]
    fn mul_truncation_tracks_valuations() {
        // window of a: [1, 5); window of b: [-2, 3) => product window ends at
        // min(1 + 3, -2 + 5) = 3.
        let a = LaurentSeries::from_terms([(1, rat_int(1)), (4, rat_int(5))], 5);
        let b = LaurentSeries::from_terms([(-2, rat_int(3))], 3);
        assert_eq!(a.mul(&b).truncation_order(), 3);
    }

    #[test]
    fn residue_examples() {
        let t_inv = LaurentSeries::monomial(-1, rat_int(1), 3);
        assert_eq!(t_inv.residue().unwrap(), rat_int(1));

        let s = LaurentSeries::from_terms([(0, rat_int(3)), (1, rat_int(5))], 4);
        assert_eq!(s.residue().unwrap(), rat_int(0));

        // t^{n-1} / (c t^n) has residue 1/c
        for (n, c) in [(1i64, 2i64), (3, -5), (4, 7)] {
            let num = LaurentSeries::monomial(n - 1, rat_int(1), n + 2);
            let den = LaurentSeries::monomial(n, rat_int(c), n + 2);
            let q = num.mul(&den.invert().unwrap());
            assert_eq!(q.residue().unwrap(), rat(1, c));
        }
    }

    #[test]
    fn residue_needs_window() {
        let s = LaurentSeries::monomial(-3, rat_int(1), -2);
        assert!(matches!(
            s.residue(),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn truncation_soundness_against_higher_order() {
        // Recompute the same pipeline at higher order; every coefficient the
        // short computation reports must agree with the long one.
        for order in 4..9 {
            let s = one_minus_exp_neg_t(order);
            let long = one_minus_exp_neg_t(order + 7);
            let inv = s.invert().unwrap();
            let inv_long = long.invert().unwrap();
            for e in inv.valuation()..inv.truncation_order() {
                assert_eq!(inv.coeff(e), inv_long.coeff(e));
            }
            let sq = inv.mul(&inv);
            let sq_long = inv_long.mul(&inv_long);
            for e in sq.valuation()..sq.truncation_order() {
                assert_eq!(sq.coeff(e), sq_long.coeff(e));
            }
        }
    }
}
