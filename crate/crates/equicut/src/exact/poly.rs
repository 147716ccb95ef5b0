//! Univariate polynomials in the equivariant parameter t over exact rationals.
//!
//! Coefficients are stored sparsely; zero coefficients are never kept, so the
//! zero polynomial is the empty map and `degree` is `None` exactly for zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::laurent::LaurentSeries;
use super::rational::{rat_int, render_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: BTreeMap<usize, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(0, c)
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(exp: usize, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (exp, c) in coeffs {
            p.add_to_coeff(exp, &c);
        }
        p
    }

    /// Coefficients listed from t^0 upward.
    pub fn from_ascending(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Poly::from_coeffs(coeffs.into_iter().enumerate())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` exactly for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    fn add_to_coeff(&mut self, exp: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// View the polynomial as a Laurent series. Every coefficient of a
    /// polynomial is known, so the window may extend past the degree:
    /// truncation order is `max(degree + 1, min_truncation)`.
    pub fn to_laurent(&self, min_truncation: i64) -> LaurentSeries {
        let trunc = match self.degree() {
            Some(d) => (d as i64 + 1).max(min_truncation),
            None => min_truncation,
        };
        LaurentSeries::from_terms(
            self.coeffs.iter().map(|(&e, c)| (e as i64, c.clone())),
            trunc,
        )
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_to_coeff(e, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_to_coeff(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
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
            let one = abs == rat_int(1);
            match (exp, one) {
                (0, _) => write!(f, "{}", render_rational(&abs))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", render_rational(&abs))?,
                (_, true) => write!(f, "t^{}", exp)?,
                (_, false) => write!(f, "{}*t^{}", render_rational(&abs), exp)?,
            }
        }
        Ok(())
    }
}
