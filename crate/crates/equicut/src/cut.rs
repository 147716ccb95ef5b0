//! The cut space at a regular level, seen through its combinatorics: which
//! points of X x P^1 (or X x A^1) are unstable for the antidiagonal action,
//! and the fixed-point inventory that localization consumes.
//!
//! The cut space itself is never materialized. Its torus-fixed locus is the
//! disjoint union of the fixed points of X lying above the level and the
//! reduced space, whose normal bundle has equivariant Euler class t; that
//! inventory is all the residue formulas downstream ever read.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::weights::{support_weights, AmbientWeights, SupportPattern};

/// Where the extra coordinate of a point of X x P^1 sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutLocus {
    /// z = [1:0]: the boundary copy of X glued at the level.
    ZeroSection,
    /// z = [0:1]: the copy of X at infinity, always unstable.
    InfinitySection,
    /// z finite and nonzero: the cylinder X x (A^1 \ 0).
    FiniteNonzero,
}

/// Classification of a point of X x P^1 under the cut action at level 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstabilityType {
    Stable,
    /// Entire section at infinity.
    TypeI,
    /// On the zero section with weights all on one side of the level.
    TypeII,
    /// Off the zero section with all weights below the level.
    TypeIII,
}

impl fmt::Display for InstabilityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InstabilityType::Stable => "STABLE",
            InstabilityType::TypeI => "TYPE_I",
            InstabilityType::TypeII => "TYPE_II",
            InstabilityType::TypeIII => "TYPE_III",
        };
        write!(f, "{s}")
    }
}

/// Classification of a point of X x A^1 (the affine chart of the cut).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineInstabilityType {
    Stable,
    /// z = 0 with weights all on one side of the level.
    TypeIiPrime,
    /// z != 0 with all weights below the level.
    TypeIiiPrime,
}

impl fmt::Display for AffineInstabilityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AffineInstabilityType::Stable => "STABLE",
            AffineInstabilityType::TypeIiPrime => "TYPE_II_PRIME",
            AffineInstabilityType::TypeIiiPrime => "TYPE_III_PRIME",
        };
        write!(f, "{s}")
    }
}

fn sign_split(p: &SupportPattern, w: &AmbientWeights) -> Result<(bool, bool)> {
    w.require_nonzero()?;
    let pi = support_weights(p, w)?;
    let all_positive = pi.iter().all(|&a| a > 0);
    let all_negative = pi.iter().all(|&a| a < 0);
    Ok((all_positive, all_negative))
}

/// Classify a point of X x P^1 for the cut at level 0. Cut at a nonzero
/// rational level by reweighting first; zero ambient weights are rejected
/// (the level must be regular).
pub fn classify_cut_point(
    p: &SupportPattern,
    w: &AmbientWeights,
    z: CutLocus,
) -> Result<InstabilityType> {
    let (all_positive, all_negative) = sign_split(p, w)?;
    Ok(match z {
        CutLocus::InfinitySection => InstabilityType::TypeI,
        CutLocus::ZeroSection if all_positive || all_negative => InstabilityType::TypeII,
        CutLocus::ZeroSection => InstabilityType::Stable,
        CutLocus::FiniteNonzero if all_negative => InstabilityType::TypeIII,
        CutLocus::FiniteNonzero => InstabilityType::Stable,
    })
}

/// Classify a point of X x A^1 for the cut at level 0.
pub fn classify_affine_point(
    p: &SupportPattern,
    w: &AmbientWeights,
    z_is_zero: bool,
) -> Result<AffineInstabilityType> {
    let (all_positive, all_negative) = sign_split(p, w)?;
    Ok(if z_is_zero {
        if all_positive || all_negative {
            AffineInstabilityType::TypeIiPrime
        } else {
            AffineInstabilityType::Stable
        }
    } else if all_negative {
        AffineInstabilityType::TypeIiiPrime
    } else {
        AffineInstabilityType::Stable
    })
}

/// A coordinate fixed point of X lying above the cutting level, with its
/// tangent weights in X (which equal its tangent weights in the cut space).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutFixedPoint {
    /// 1-based coordinate index.
    pub index: usize,
    pub ambient_weight: i64,
    pub label: String,
    pub tangent_weights: Vec<i64>,
}

/// Torus-fixed locus of the cut space: the fixed points above the level,
/// plus (when the stable locus is nonempty) the reduced space as a fixed
/// component whose normal bundle has Euler class t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInventory {
    pub upper_fixed: Vec<CutFixedPoint>,
    pub reduced_present: bool,
    /// Weight of the torus action on the normal line of the reduced
    /// component; always 1 by construction.
    pub reduced_normal_weight: i64,
}

/// Fixed-point inventory of the cut of P(V) at a regular level q.
pub fn cut_fixed_inventory(w: &AmbientWeights, q: &Rational) -> Result<CutInventory> {
    w.require_distinct()?;
    crate::weights::require_regular(w, q)?;
    let mut upper_fixed = Vec::new();
    let mut any_below = false;
    for (pos, &a_i) in w.weights().iter().enumerate() {
        let index = pos + 1;
        let above = Rational::from_integer(a_i.into()) > *q;
        if Rational::from_integer(a_i.into()) < *q {
            any_below = true;
        }
        if above {
            upper_fixed.push(CutFixedPoint {
                index,
                ambient_weight: a_i,
                label: format!("e{index}"),
                tangent_weights: w.tangent_weights_at(index)?,
            });
        }
    }
    let reduced_present = any_below && !upper_fixed.is_empty();
    Ok(CutInventory {
        upper_fixed,
        reduced_present,
        reduced_normal_weight: 1,
    })
}

/// Weight bookkeeping for the Segre-product embedding used to prove the cut
/// is projective: the diagonal and antidiagonal torus weights on the ambient
/// representation, and whether zero avoids the antidiagonal list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiWeights {
    pub diagonal: Vec<i64>,
    pub antidiagonal: Vec<i64>,
    pub zero_free: bool,
}

/// Compute the embedding weight lists for twist parameter N. Requires
/// N > max a_i and no zero ambient weight; under those bounds the
/// antidiagonal list can never contain 0.
pub fn psi_weight_check(w: &AmbientWeights, n_twist: i64) -> Result<PsiWeights> {
    w.require_nonzero()?;
    let max = w.max_weight();
    if n_twist <= max {
        return Err(Error::PsiBound {
            bound: n_twist,
            max,
        });
    }
    let diagonal: Vec<i64> = w
        .weights()
        .iter()
        .copied()
        .chain(w.weights().iter().map(|a| a + n_twist))
        .collect();
    let antidiagonal: Vec<i64> = w
        .weights()
        .iter()
        .copied()
        .chain(w.weights().iter().map(|a| a - n_twist))
        .collect();
    let zero_free = !antidiagonal.contains(&0);
    Ok(PsiWeights {
        diagonal,
        antidiagonal,
        zero_free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn w(v: &[i64]) -> AmbientWeights {
        AmbientWeights::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> SupportPattern {
        SupportPattern::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn projective_classification() {
        // the section at infinity is unstable no matter the point below
        assert_eq!(
            classify_cut_point(&p(&[1, 2]), &w(&[-1, 1]), CutLocus::InfinitySection).unwrap(),
            InstabilityType::TypeI
        );
        assert_eq!(
            classify_cut_point(&p(&[1, 2]), &w(&[-1, -3]), CutLocus::FiniteNonzero).unwrap(),
            InstabilityType::TypeIII
        );
        assert_eq!(
            classify_cut_point(&p(&[1, 2]), &w(&[-1, 2]), CutLocus::ZeroSection).unwrap(),
            InstabilityType::Stable
        );
        // one-sided weight sets are unstable on the zero section
        assert_eq!(
            classify_cut_point(&p(&[2]), &w(&[-1, 2]), CutLocus::ZeroSection).unwrap(),
            InstabilityType::TypeII
        );
        assert!(matches!(
            classify_cut_point(&p(&[1]), &w(&[0, 1]), CutLocus::ZeroSection),
            Err(Error::ZeroWeight { index: 1 })
        ));
    }

    #[test]
    fn affine_classification_matches_boundary_and_restriction() {
        let ws = w(&[-2, -1, 1, 3]);
        let zero = rat_int(0);
        for pat in SupportPattern::all(4) {
            // on z = 0 the stable points are exactly the stable points of X
            let at_zero = classify_affine_point(&pat, &ws, true).unwrap();
            assert_eq!(
                at_zero == AffineInstabilityType::Stable,
                crate::weights::is_stable(&pat, &ws, &zero).unwrap()
            );
            // off z = 0 the stable points are exactly X_{>0}
            let off_zero = classify_affine_point(&pat, &ws, false).unwrap();
            assert_eq!(
                off_zero == AffineInstabilityType::Stable,
                crate::weights::is_in_upper(&pat, &ws, &zero).unwrap()
            );
        }
    }

    #[test]
    fn inventory_p1_at_half() {
        let inv = cut_fixed_inventory(&w(&[0, 1]), &rat(1, 2)).unwrap();
        assert_eq!(inv.upper_fixed.len(), 1);
        assert_eq!(inv.upper_fixed[0].index, 2);
        assert_eq!(inv.upper_fixed[0].label, "e2");
        assert_eq!(inv.upper_fixed[0].tangent_weights, vec![-1]);
        assert!(inv.reduced_present);
        assert_eq!(inv.reduced_normal_weight, 1);
    }

    #[test]
    fn inventory_all_above_has_no_reduced_space() {
        let inv = cut_fixed_inventory(&w(&[1, 2, 3]), &rat_int(0)).unwrap();
        assert_eq!(inv.upper_fixed.len(), 3);
        assert_eq!(inv.upper_fixed[0].tangent_weights, vec![1, 2]);
        assert_eq!(inv.upper_fixed[1].tangent_weights, vec![-1, 1]);
        assert_eq!(inv.upper_fixed[2].tangent_weights, vec![-2, -1]);
        assert!(!inv.reduced_present);
    }

    #[test]
    fn inventory_symmetric_pair() {
        let inv = cut_fixed_inventory(&w(&[-1, 1]), &rat_int(0)).unwrap();
        assert_eq!(inv.upper_fixed.len(), 1);
        assert_eq!(inv.upper_fixed[0].index, 2);
        assert_eq!(inv.upper_fixed[0].tangent_weights, vec![-2]);
        assert!(inv.reduced_present);
    }

    #[test]
    fn inventory_rejects_bad_input() {
        assert!(matches!(
            cut_fixed_inventory(&w(&[1, 1]), &rat_int(0)),
            Err(Error::RepeatedWeights)
        ));
        assert!(matches!(
            cut_fixed_inventory(&w(&[0, 1]), &rat_int(1)),
            Err(Error::NonRegularLevel { .. })
        ));
    }

    #[test]
    fn upper_count_matches_weights_above_level() {
        let ws = w(&[-4, -1, 2, 3, 7]);
        for q in [rat_int(0), rat(5, 2), rat(-9, 4)] {
            let inv = cut_fixed_inventory(&ws, &q).unwrap();
            let expect = ws
                .weights()
                .iter()
                .filter(|&&a| Rational::from_integer(a.into()) > q)
                .count();
            assert_eq!(inv.upper_fixed.len(), expect);
        }
    }

    #[test]
    fn psi_weights_example() {
        let out = psi_weight_check(&w(&[-1, 1]), 2).unwrap();
        assert_eq!(out.diagonal, vec![-1, 1, 1, 3]);
        assert_eq!(out.antidiagonal, vec![-1, 1, -3, -1]);
        assert!(out.zero_free);

        assert!(matches!(
            psi_weight_check(&w(&[-1, 1]), 1),
            Err(Error::PsiBound { bound: 1, max: 1 })
        ));
        assert!(matches!(
            psi_weight_check(&w(&[0, 1]), 5),
            Err(Error::ZeroWeight { .. })
        ));
    }
}
