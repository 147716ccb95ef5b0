//! Internal bivariate polynomials in (h, t) over exact rationals, with
//! division by the defining relation of the equivariant Chow presentation.
//!
//! The relation prod_j (h + a_j t) is monic in h, so reduction is ordinary
//! polynomial division in h with coefficients in Q[t]; representatives keep
//! h-degree below the number of ambient weights.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::poly::Poly;
use crate::exact::rational::{rat_int, Rational};

/// Sparse polynomial keyed by (h exponent, t exponent).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly2 {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Poly2 {
    pub(crate) fn zero() -> Self {
        Poly2::default()
    }

    pub(crate) fn one() -> Self {
        Poly2::monomial(0, 0, rat_int(1))
    }

    pub(crate) fn monomial(h_exp: usize, t_exp: usize, c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.add_term(h_exp, t_exp, c);
        p
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub(crate) fn add_term(&mut self, h_exp: usize, t_exp: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((h_exp, t_exp))
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(h_exp, t_exp));
        }
    }

    pub(crate) fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(h, t), c) in &other.terms {
            out.add_term(h, t, c.clone());
        }
        out
    }

    pub(crate) fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub(crate) fn scale(&self, s: &Rational) -> Poly2 {
        if s.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(ha, ta), ca) in &self.terms {
            for (&(hb, tb), cb) in &other.terms {
                out.add_term(ha + hb, ta + tb, ca * cb);
            }
        }
        out
    }

    /// Reduce modulo prod_j (h + a_j t): replace h^n by
    /// -sum_{k<n} e_{n-k}(a) h^k t^{n-k} until every h-exponent is below n.
    pub(crate) fn reduce(mut self, weights: &[i64]) -> Poly2 {
        let n = weights.len();
        let e = elementary_symmetric(weights);
        while let Some((&(h_exp, t_exp), _)) = self.terms.iter().next_back() {
            if h_exp < n {
                break;
            }
            let c = self.terms.remove(&(h_exp, t_exp)).expect("term present");
            for k in 0..n {
                self.add_term(h_exp - n + k, t_exp + n - k, -(&c * &e[n - k]));
            }
        }
        self
    }

    /// Substitute h by c_h * t, collapsing to a polynomial in t alone.
    pub(crate) fn substitute_h(&self, c_h: i64) -> Poly {
        let base = rat_int(c_h);
        let mut out = Poly::zero();
        for (&(h_exp, t_exp), c) in &self.terms {
            let mut scaled = c.clone();
            for _ in 0..h_exp {
                scaled *= &base;
            }
            out = &out + &Poly::monomial(h_exp + t_exp, scaled);
        }
        out
    }

    /// Total (h, t)-degree shared by every term, or None when terms of
    /// different total degrees are mixed. Zero reports None.
    pub(crate) fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|&(h, t)| h + t);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub(crate) fn homogeneous_part(&self, degree: usize) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|((h, t), _)| h + t == degree)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }
}

/// e_0..e_n of the weight list, as rationals.
fn elementary_symmetric(weights: &[i64]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); weights.len() + 1];
    e[0] = rat_int(1);
    for (i, &a) in weights.iter().enumerate() {
        let a = rat_int(a);
        for k in (1..=i + 1).rev() {
            let bump = &e[k - 1] * &a;
            e[k] += bump;
        }
    }
    e
}

/// The defining relation prod_j (h + a_j t), unreduced.
pub(crate) fn defining_relation(weights: &[i64]) -> Poly2 {
    let mut p = Poly2::one();
    for &a in weights {
        let mut factor = Poly2::monomial(1, 0, rat_int(1));
        factor.add_term(0, 1, rat_int(a));
        p = p.mul(&factor);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn elementary_symmetric_basics() {
        let e = elementary_symmetric(&[1, 2, 3]);
        assert_eq!(e[0], rat_int(1));
        assert_eq!(e[1], rat_int(6));
        assert_eq!(e[2], rat_int(11));
        assert_eq!(e[3], rat_int(6));
    }

    #[test]
    fn relation_reduces_to_zero() {
        for w in [vec![0, 1], vec![-1, 1], vec![0, 1, 2], vec![-3, 2, 5, 7]] {
            let rel = defining_relation(&w);
            assert!(rel.reduce(&w).is_zero());
        }
    }

    #[test]
    fn reduce_keeps_low_degrees_alone() {
        let p = Poly2::monomial(1, 3, rat(2, 3));
        assert_eq!(p.clone().reduce(&[0, 1]), p);
    }

    #[test]
    fn reduce_matches_direct_substitution() {
        // For w = (0,1): relation h(h + t) = 0, so h^2 = -h t.
        let p = Poly2::monomial(2, 0, rat_int(1)).reduce(&[0, 1]);
        assert_eq!(p, Poly2::monomial(1, 1, rat_int(-1)));
    }

    #[test]
    fn substitution_collapses_to_t() {
        // h^2 t at h = -2t gives 4 t^3
        let p = Poly2::monomial(2, 1, rat_int(1));
        let q = p.substitute_h(-2);
        assert_eq!(q.coeff(3), rat_int(4));
        assert_eq!(q.degree(), Some(3));
    }

    #[test]
    fn homogeneous_queries() {
        let mut p = Poly2::monomial(1, 1, rat_int(1));
        p.add_term(0, 2, rat_int(5));
        assert_eq!(p.homogeneous_degree(), Some(2));
        p.add_term(0, 0, rat_int(1));
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!(p.homogeneous_part(2).homogeneous_degree(), Some(2));
    }
}
