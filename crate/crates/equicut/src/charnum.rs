//! Characteristic numbers of the reduced space from fixed-point data above
//! the level: Euler characteristic and Todd genus via residues at t = 0.
//!
//! The Todd genus is computed from the series residue of
//! 1 / prod_i (1 - e^{-t alpha_i}); an alternative closed form (the pairwise
//! sum of alpha_l / (2 alpha_i)) circulates for the same quantity but does
//! not match direct expansion even in one-dimensional cases, so it is only
//! exposed through a comparator that reports both values side by side. The
//! series route is the one validated against quotients with known chi(O).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::laurent::LaurentSeries;
use crate::exact::poly::Poly;
use crate::exact::rational::{rat_int, Rational};
use crate::localization::FixedPointDatum;

/// chi of the reduced space: minus the sum over upper fixed points of the
/// reciprocals of their tangent weights.
pub fn euler_characteristic(upper: &[FixedPointDatum]) -> Rational {
    let mut sum = Rational::zero();
    for datum in upper {
        for &alpha in &datum.tangent_weights {
            sum += rat_int(1) / rat_int(alpha);
        }
    }
    -sum
}

/// Restriction of the (n-1)-st Chern class of the tangent bundle at a fixed
/// point with the given tangent weights: t^{n-1} * sum_i prod_{j != i} a_j.
pub fn chern_restriction_cn1(tangent_weights: &[i64]) -> Poly {
    assert!(
        !tangent_weights.is_empty(),
        "tangent weight list must be nonempty"
    );
    let n = tangent_weights.len();
    let mut sum = Rational::zero();
    for i in 0..n {
        let mut prod = rat_int(1);
        for (j, &alpha) in tangent_weights.iter().enumerate() {
            if j != i {
                prod *= rat_int(alpha);
            }
        }
        sum += prod;
    }
    Poly::monomial(n - 1, sum)
}

/// Todd-genus contribution of one fixed point: the full integrand series
/// 1 / prod_i (1 - e^{-t alpha_i}) at the given working order.
fn todd_integrand(tangent_weights: &[i64], order: i64) -> Result<LaurentSeries> {
    let mut prod = LaurentSeries::one(order);
    for &alpha in tangent_weights {
        let factor = LaurentSeries::one(order).sub(&LaurentSeries::exp(&rat_int(-alpha), order));
        prod = prod.mul(&factor);
    }
    prod.invert()
}

fn require_todd_order(upper: &[FixedPointDatum], order: i64) -> Result<()> {
    for datum in upper {
        let required = datum.tangent_weights.len() as i64 + 2;
        if order < required {
            return Err(Error::OrderTooSmall { order, required });
        }
    }
    Ok(())
}

/// Todd genus chi(O) of the reduced space: minus the sum of the residues of
/// the fixed-point integrands. The working order must exceed each point's
/// pole order by at least two, which keeps every residue inside the known
/// window; the value is independent of the order beyond that bound.
pub fn todd_genus(upper: &[FixedPointDatum], order: i64) -> Result<Rational> {
    require_todd_order(upper, order)?;
    let mut sum = Rational::zero();
    for datum in upper {
        sum += todd_integrand(&datum.tangent_weights, order)?.residue()?;
    }
    Ok(-sum)
}

/// Side-by-side evaluation of the series residue and the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddComparison {
    pub series_value: Rational,
    pub closed_form_value: Rational,
    pub agree: bool,
}

/// Compare the series Todd genus with the closed form
/// -sum_p sum_{i != l} alpha_l / (2 alpha_i). The two disagree on simple
/// inputs; the comparator records both without picking a winner.
pub fn todd_closed_form_comparator(
    upper: &[FixedPointDatum],
    order: i64,
) -> Result<ToddComparison> {
    let series_value = todd_genus(upper, order)?;
    let mut sum = Rational::zero();
    for datum in upper {
        let tw = &datum.tangent_weights;
        for i in 0..tw.len() {
            for l in 0..tw.len() {
                if i != l {
                    sum += rat_int(tw[l]) / (rat_int(2) * rat_int(tw[i]));
                }
            }
        }
    }
    let closed_form_value = -sum;
    let agree = series_value == closed_form_value;
    Ok(ToddComparison {
        series_value,
        closed_form_value,
        agree,
    })
}
