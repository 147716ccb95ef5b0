//! Brute-force validators for the stability criterion, independent of the
//! sign-based predicates: search for invariant monomial sections directly,
//! and check that invariant sections vanish on the unstable loci of the
//! affine cut.
//!
//! Everything here enumerates exponent vectors exhaustively (no sign
//! shortcuts, no randomization), so agreement with the weight-set criterion
//! is a genuine cross-check of two different definitions of stability.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::weights::{support_weights, AmbientWeights, SupportPattern};

/// A monomial section of O(d) on P(V): exponents per coordinate index,
/// total degree, and its torus weight as a section (minus the sum of the
/// coordinate weights, counted with exponents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSection {
    /// Nonzero exponents, keyed by 1-based coordinate index.
    pub exponents: BTreeMap<usize, i64>,
    pub degree: i64,
    pub t_weight: i64,
}

impl fmt::Display for MonomialSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&index, &exp) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "x{index}")?;
            } else {
                write!(f, "x{index}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Visit every weak composition of `total` into `slots` parts; stop early
/// when the visitor returns true and report whether it ever did.
fn any_composition(
    slots: usize,
    total: i64,
    exps: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]) -> bool,
) -> bool {
    if slots == 1 {
        exps.push(total);
        let hit = visit(exps);
        exps.pop();
        return hit;
    }
    for first in 0..=total {
        exps.push(first);
        if any_composition(slots - 1, total - first, exps, visit) {
            exps.pop();
            return true;
        }
        exps.pop();
    }
    false
}

/// Degree bound that makes the monomial search exact for this pattern: the
/// lcm of (a_j - a_i) over pairs of pattern weights with a_i < 0 < a_j.
/// Each such pair supports the invariant monomial x_i^{a_j} x_j^{-a_i} of
/// degree a_j - a_i, so if the pattern straddles zero a witness exists
/// within the bound; with no straddling pair there is no invariant monomial
/// at any degree and degree 1 suffices to see that.
pub fn exact_degree_bound(p: &SupportPattern, w: &AmbientWeights) -> Result<i64> {
    w.require_nonzero()?;
    let pi = support_weights(p, w)?;
    let mut bound: i64 = 1;
    for &neg in pi.iter().filter(|&&a| a < 0) {
        for &pos in pi.iter().filter(|&&a| a > 0) {
            bound = bound.lcm(&(pos - neg));
        }
    }
    Ok(bound)
}

/// Search for a T-invariant monomial of degree 1..=d_max supported only on
/// the pattern's coordinates; returns the first witness in ascending degree
/// order, or None if no such monomial exists up to the cap.
pub fn find_invariant_monomial(
    p: &SupportPattern,
    w: &AmbientWeights,
    d_max: i64,
) -> Result<Option<MonomialSection>> {
    assert!(d_max >= 1, "degree cap must be at least 1");
    w.require_nonzero()?;
    support_weights(p, w)?; // validates indices
    let indices: Vec<usize> = p.indices().collect();
    let weights: Vec<i64> = indices
        .iter()
        .map(|&i| w.weight(i))
        .collect::<Result<_>>()?;

    for d in 1..=d_max {
        let mut witness = None;
        let mut exps = Vec::with_capacity(indices.len());
        any_composition(indices.len(), d, &mut exps, &mut |m| {
            let weight_sum: i64 = m.iter().zip(&weights).map(|(e, a)| e * a).sum();
            if weight_sum != 0 {
                return false;
            }
            witness = Some(MonomialSection {
                exponents: indices
                    .iter()
                    .zip(m)
                    .filter(|(_, &e)| e != 0)
                    .map(|(&i, &e)| (i, e))
                    .collect(),
                degree: d,
                t_weight: 0,
            });
            true
        });
        if witness.is_some() {
            return Ok(witness);
        }
    }
    Ok(None)
}

/// True when some invariant monomial of degree up to d_max is supported in
/// the pattern — the classical section-based semistability test at level 0.
pub fn invariant_monomial_exists(
    p: &SupportPattern,
    w: &AmbientWeights,
    d_max: i64,
) -> Result<bool> {
    Ok(find_invariant_monomial(p, w, d_max)?.is_some())
}

/// Check that every invariant section of degree d vanishes on an unstable
/// point of the affine cut. For a point on z = 0 (weights all on one side)
/// the relevant sections are the T-invariant degree-d monomials; off z = 0
/// (weights all negative) every monomial of nonnegative torus weight
/// matters. Returns true when no such monomial is supported in the pattern.
pub fn a_invariant_sections_vanish(
    p: &SupportPattern,
    w: &AmbientWeights,
    z_is_zero: bool,
    d: i64,
) -> Result<bool> {
    assert!(d >= 1, "degree must be at least 1");
    w.require_nonzero()?;
    let pi = support_weights(p, w)?;
    let all_positive = pi.iter().all(|&a| a > 0);
    let all_negative = pi.iter().all(|&a| a < 0);
    let is_claimed_type = if z_is_zero {
        all_positive || all_negative
    } else {
        all_negative
    };
    if !is_claimed_type {
        return Err(Error::NotUnstableType);
    }

    let indices: Vec<usize> = p.indices().collect();
    let weights: Vec<i64> = indices
        .iter()
        .map(|&i| w.weight(i))
        .collect::<Result<_>>()?;
    let mut exps = Vec::with_capacity(indices.len());
    let found_nonvanishing = any_composition(indices.len(), d, &mut exps, &mut |m| {
        let weight_sum: i64 = m.iter().zip(&weights).map(|(e, a)| e * a).sum();
        if z_is_zero {
            weight_sum == 0
        } else {
            weight_sum >= 0
        }
    });
    Ok(!found_nonvanishing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;
    use crate::weights::is_stable;

    fn w(v: &[i64]) -> AmbientWeights {
        AmbientWeights::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> SupportPattern {
        SupportPattern::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn monomial_search_examples() {
        // weights (-1, 2): x1^2 x2 is invariant at degree 3
        let found = find_invariant_monomial(&p(&[1, 2]), &w(&[-1, 2]), 3)
            .unwrap()
            .unwrap();
        assert_eq!(found.degree, 3);
        assert_eq!(found.t_weight, 0);
        assert_eq!(found.to_string(), "x1^2*x2");

        // one-sided weights admit no invariant monomial at any degree
        assert!(find_invariant_monomial(&p(&[1, 2]), &w(&[1, 2]), 12)
            .unwrap()
            .is_none());

        // x1 x2 for opposite unit weights
        let found = find_invariant_monomial(&p(&[1, 2]), &w(&[-1, 1]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(found.degree, 2);
        assert_eq!(found.to_string(), "x1*x2");
    }

    #[test]
    fn degree_bound_examples() {
        assert_eq!(exact_degree_bound(&p(&[1, 2]), &w(&[-1, 2])).unwrap(), 3);
        assert_eq!(exact_degree_bound(&p(&[1, 2]), &w(&[1, 2])).unwrap(), 1);
        // straddling pairs (-2,3) and (-2,4): lcm(5, 6) = 30
        assert_eq!(
            exact_degree_bound(&p(&[1, 2, 3]), &w(&[-2, 3, 4])).unwrap(),
            30
        );
    }

    #[test]
    fn vanishing_examples() {
        // off the zero section with all-negative weights
        assert!(a_invariant_sections_vanish(&p(&[1]), &w(&[-1, 1]), false, 2).unwrap());
        // on the zero section with one-sided weights
        assert!(a_invariant_sections_vanish(&p(&[2]), &w(&[-1, 1]), true, 2).unwrap());
        // stable pattern is not an unstable type
        assert!(matches!(
            a_invariant_sections_vanish(&p(&[1, 2]), &w(&[-1, 1]), false, 2),
            Err(Error::NotUnstableType)
        ));
    }

    #[test]
    fn oracle_matches_criterion_small_range() {
        // exhaustive over 1..=3 nonzero weights in [-3,3]
        let values: Vec<i64> = (-3..=3).filter(|&a| a != 0).collect();
        let mut vectors: Vec<Vec<i64>> = values.iter().map(|&a| vec![a]).collect();
        for len in 2..=3 {
            let prev: Vec<Vec<i64>> = vectors
                .iter()
                .filter(|v| v.len() == len - 1)
                .cloned()
                .collect();
            for v in prev {
                for &a in &values {
                    let mut next = v.clone();
                    next.push(a);
                    vectors.push(next);
                }
            }
        }
        for ws in vectors {
            let ambient = w(&ws);
            for pat in SupportPattern::all(ws.len()) {
                let bound = exact_degree_bound(&pat, &ambient).unwrap();
                let by_oracle = invariant_monomial_exists(&pat, &ambient, bound).unwrap();
                let by_criterion = is_stable(&pat, &ambient, &rat_int(0)).unwrap();
                assert_eq!(by_oracle, by_criterion, "weights {ws:?}, pattern {pat:?}");
            }
        }
    }
}
