//! Fixed-point localization: restrictions, equivariant Euler classes, the
//! wall-crossing residue formula, and the global residue-zero check.
//!
//! The degree of a class capped against the reduced space equals minus the
//! sum, over the fixed points above the level, of the residue at t = 0 of
//! (restriction / Euler class). Summing the same residues over all fixed
//! points of P(V) instead gives zero for classes of degree dim - 1, which is
//! the engine's strongest internal consistency check.

pub mod class;
pub(crate) mod ht_poly;
mod parse;

pub use class::{
    euler_sequence_restriction, restrict_at_fixed_point, tangent_chern_class, EquivariantClass,
};

use crate::cut::cut_fixed_inventory;
use crate::error::{Error, Result};
use crate::exact::laurent::LaurentSeries;
use crate::exact::poly::Poly;
use crate::exact::rational::{rat_int, Rational};
use crate::weights::AmbientWeights;

use num_traits::Zero;

/// An isolated fixed point with its tangent weights and the restriction of
/// the class being integrated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub label: String,
    pub tangent_weights: Vec<i64>,
    pub restriction: LaurentSeries,
}

impl FixedPointDatum {
    pub fn new(
        label: impl Into<String>,
        tangent_weights: Vec<i64>,
        restriction: LaurentSeries,
    ) -> Result<Self> {
        if tangent_weights.is_empty() {
            return Err(Error::EmptyTangentWeights);
        }
        if tangent_weights.contains(&0) {
            return Err(Error::ZeroTangentWeight);
        }
        Ok(FixedPointDatum {
            label: label.into(),
            tangent_weights,
            restriction,
        })
    }

    /// Datum with a polynomial restriction; the series window is padded past
    /// the pole order so residues are always known.
    pub fn from_poly(
        label: impl Into<String>,
        tangent_weights: Vec<i64>,
        restriction: &Poly,
    ) -> Result<Self> {
        let pad = tangent_weights.len() as i64 + 2;
        Self::new(label, tangent_weights, restriction.to_laurent(pad))
    }
}

/// Equivariant Euler class of the tangent space with the given weights:
/// t^d times the product of the weights.
pub fn euler_class(tangent_weights: &[i64]) -> Result<Poly> {
    if tangent_weights.contains(&0) {
        return Err(Error::ZeroTangentWeight);
    }
    let mut prod = rat_int(1);
    for &a in tangent_weights {
        prod *= rat_int(a);
    }
    Ok(Poly::monomial(tangent_weights.len(), prod))
}

/// residue(restriction / Euler class) at one fixed point.
fn residue_term(datum: &FixedPointDatum) -> Result<Rational> {
    let d = datum.tangent_weights.len() as i64;
    let mut prod = rat_int(1);
    for &a in &datum.tangent_weights {
        prod *= rat_int(a);
    }
    // dividing by the monomial c t^d is a shift and a scale
    datum
        .restriction
        .shift(-d)
        .scale(&(rat_int(1) / prod))
        .residue()
}

/// Degree of the class capped against the reduced space: minus the sum of
/// the fixed-point residues above the level.
pub fn kalkman_integral(upper: &[FixedPointDatum]) -> Result<Rational> {
    let mut sum = Rational::zero();
    for datum in upper {
        sum += residue_term(datum)?;
    }
    Ok(-sum)
}

/// Result of the residue formula together with whether the reduced space is
/// nonempty (an empty stable locus still yields a well-defined sum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalkmanEvaluation {
    pub value: Rational,
    pub reduced_present: bool,
}

fn check_integrand_degree(w: &AmbientWeights, c: &EquivariantClass) -> Result<usize> {
    if w.len() < 2 {
        return Err(Error::AmbientTooSmall);
    }
    let expected = w.dimension() - 1;
    if !c.is_zero() && c.homogeneous_degree() != Some(expected) {
        return Err(Error::WrongClassDegree { expected });
    }
    Ok(expected)
}

/// Evaluate the residue formula for P(V) at a regular level: build the
/// fixed-point inventory above the level, restrict the class at each point,
/// and take minus the residue sum.
pub fn kalkman_from_class(
    w: &AmbientWeights,
    q: &Rational,
    c: &EquivariantClass,
) -> Result<KalkmanEvaluation> {
    check_integrand_degree(w, c)?;
    let inventory = cut_fixed_inventory(w, q)?;
    let mut upper = Vec::with_capacity(inventory.upper_fixed.len());
    for point in &inventory.upper_fixed {
        let restriction = restrict_at_fixed_point(c, point.index, w)?;
        upper.push(FixedPointDatum::from_poly(
            point.label.clone(),
            point.tangent_weights.clone(),
            &restriction,
        )?);
    }
    Ok(KalkmanEvaluation {
        value: kalkman_integral(&upper)?,
        reduced_present: inventory.reduced_present,
    })
}

/// Sum of the fixed-point residues over ALL coordinate fixed points of
/// P(V). For a class of degree dim - 1 this vanishes identically.
pub fn total_residue(w: &AmbientWeights, c: &EquivariantClass) -> Result<Rational> {
    check_integrand_degree(w, c)?;
    w.require_distinct()?;
    let mut sum = Rational::zero();
    for index in 1..=w.len() {
        let restriction = restrict_at_fixed_point(c, index, w)?;
        let datum = FixedPointDatum::from_poly(
            format!("e{index}"),
            w.tangent_weights_at(index)?,
            &restriction,
        )?;
        sum += residue_term(&datum)?;
    }
    Ok(sum)
}

/// The t^0 coefficient: the image of a restricted class under the forgetful
/// map to ordinary Chow groups.
pub fn constant_term_reduction(p: &Poly) -> Rational {
    p.constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn w(v: &[i64]) -> AmbientWeights {
        AmbientWeights::new(v.to_vec()).unwrap()
    }

    fn datum(label: &str, tw: &[i64], restriction: &Poly) -> FixedPointDatum {
        FixedPointDatum::from_poly(label, tw.to_vec(), restriction).unwrap()
    }

    #[test]
    fn euler_class_examples() {
        assert_eq!(euler_class(&[-1]).unwrap(), Poly::monomial(1, rat_int(-1)));
        assert_eq!(
            euler_class(&[-1, 1]).unwrap(),
            Poly::monomial(2, rat_int(-1))
        );
        assert_eq!(
            euler_class(&[-2, -1]).unwrap(),
            Poly::monomial(2, rat_int(2))
        );
        assert!(matches!(
            euler_class(&[1, 0]),
            Err(Error::ZeroTangentWeight)
        ));
    }

    #[test]
    fn kalkman_point_quotient() {
        // Single upper fixed point with tangent weight -1 and restriction 1:
        // the reduced space is a plain point of degree 1.
        let upper = [datum("e2", &[-1], &Poly::one())];
        assert_eq!(kalkman_integral(&upper).unwrap(), rat_int(1));
    }

    #[test]
    fn kalkman_empty_sum() {
        assert_eq!(kalkman_integral(&[]).unwrap(), rat_int(0));
    }

    #[test]
    fn kalkman_product_of_lines_data() {
        // Three upper fixed points of a product of two lines; the class is
        // the pullback of the hyperplane class of the first factor, whose
        // descended degree on the reduced line is 0.
        let minus_t = Poly::monomial(1, rat_int(-1));
        let upper = [
            datum("e2xe1", &[-1, 1], &minus_t),
            datum("e2xe2", &[-1, -1], &minus_t),
            datum("e1xe2", &[1, -1], &Poly::zero()),
        ];
        assert_eq!(kalkman_integral(&upper).unwrap(), rat_int(0));
    }

    #[test]
    fn kalkman_from_class_line() {
        let ws = w(&[0, 1]);
        let out = kalkman_from_class(&ws, &rat(1, 2), &EquivariantClass::one()).unwrap();
        assert_eq!(out.value, rat_int(1));
        assert!(out.reduced_present);
    }

    #[test]
    fn kalkman_from_class_plane() {
        let ws = w(&[0, 1, 2]);
        let h = EquivariantClass::hyperplane(&ws);
        let out = kalkman_from_class(&ws, &rat(1, 2), &h).unwrap();
        assert_eq!(out.value, rat_int(0));
        assert!(out.reduced_present);
    }

    #[test]
    fn kalkman_flags_empty_quotient() {
        let ws = w(&[1, 2, 3]);
        let h = EquivariantClass::hyperplane(&ws);
        let out = kalkman_from_class(&ws, &rat_int(0), &h).unwrap();
        assert_eq!(out.value, rat_int(0));
        assert!(!out.reduced_present);
    }

    #[test]
    fn kalkman_rejects_wrong_degree() {
        let ws = w(&[0, 1, 2]);
        let one = EquivariantClass::one();
        assert!(matches!(
            kalkman_from_class(&ws, &rat(1, 2), &one),
            Err(Error::WrongClassDegree { expected: 1 })
        ));
    }

    #[test]
    fn total_residue_examples() {
        assert_eq!(
            total_residue(&w(&[0, 1]), &EquivariantClass::one()).unwrap(),
            rat_int(0)
        );
        let ws = w(&[0, 1, 2]);
        assert_eq!(
            total_residue(&ws, &EquivariantClass::hyperplane(&ws)).unwrap(),
            rat_int(0)
        );
        assert_eq!(
            total_residue(&w(&[-1, 1]), &EquivariantClass::one()).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn total_residue_term_values() {
        // w = (-1,1), class 1: e_1 contributes res(1/(2t)) = 1/2 and e_2
        // contributes -1/2; the cancellation is exact.
        let ws = w(&[-1, 1]);
        let one = EquivariantClass::one();
        let r1 = restrict_at_fixed_point(&one, 1, &ws).unwrap();
        let d1 = datum("e1", &ws.tangent_weights_at(1).unwrap(), &r1);
        assert_eq!(residue_term(&d1).unwrap(), rat(1, 2));
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(
            constant_term_reduction(&Poly::from_ascending([rat_int(5), rat_int(3)])),
            rat_int(5)
        );
        assert_eq!(constant_term_reduction(&Poly::monomial(2, rat_int(1))), rat_int(0));
        assert_eq!(constant_term_reduction(&Poly::zero()), rat_int(0));
    }
}
