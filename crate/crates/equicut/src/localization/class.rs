//! Equivariant classes on P(V) in the (h, t)-presentation.
//!
//! The equivariant Chow ring of P(V) is presented as Q[h, t] modulo the
//! single relation prod_j (h + a_j t). The hyperplane class restricts at the
//! coordinate fixed point e_i as h -> -a_i t; that sign pins every other
//! convention in the crate and is enforced by the Euler-sequence identity
//! tested below: the total Chern class of the tangent bundle restricts at
//! e_i to prod_{j != i} (1 + (a_j - a_i) t).

use std::fmt;

use crate::error::Result;
use crate::exact::poly::Poly;
use crate::exact::rational::{rat_int, render_rational, Rational};
use crate::weights::AmbientWeights;

use super::ht_poly::Poly2;
use super::parse::parse_class_expr;

/// An element of the equivariant Chow ring of P(V), stored reduced: the
/// h-degree of the representative is below the number of ambient weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    rep: Poly2,
}

impl EquivariantClass {
    pub fn zero() -> Self {
        EquivariantClass { rep: Poly2::zero() }
    }

    pub fn one() -> Self {
        EquivariantClass { rep: Poly2::one() }
    }

    pub fn constant(c: Rational) -> Self {
        EquivariantClass {
            rep: Poly2::monomial(0, 0, c),
        }
    }

    /// Class from (h exponent, t exponent, coefficient) terms, reduced
    /// modulo the relation of the given weights.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (usize, usize, Rational)>,
        w: &AmbientWeights,
    ) -> Self {
        let mut p = Poly2::zero();
        for (h_exp, t_exp, c) in terms {
            p.add_term(h_exp, t_exp, c);
        }
        EquivariantClass {
            rep: p.reduce(w.weights()),
        }
    }

    /// The equivariant hyperplane class.
    pub fn hyperplane(w: &AmbientWeights) -> Self {
        Self::from_terms([(1, 0, rat_int(1))], w)
    }

    /// Parse an expression in h and t and reduce it.
    pub fn parse(src: &str, w: &AmbientWeights) -> Result<Self> {
        Ok(EquivariantClass {
            rep: parse_class_expr(src)?.reduce(w.weights()),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        EquivariantClass {
            rep: self.rep.add(&other.rep),
        }
    }

    pub fn neg(&self) -> Self {
        EquivariantClass {
            rep: self.rep.neg(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        EquivariantClass {
            rep: self.rep.scale(s),
        }
    }

    /// Ring product; the result is re-reduced with the given weights.
    pub fn mul(&self, other: &Self, w: &AmbientWeights) -> Self {
        EquivariantClass {
            rep: self.rep.mul(&other.rep).reduce(w.weights()),
        }
    }

    /// Total degree if the representative is homogeneous; None for the zero
    /// class or mixed-degree representatives.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        self.rep.homogeneous_degree()
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        EquivariantClass {
            rep: self.rep.homogeneous_part(degree),
        }
    }

}

impl fmt::Display for EquivariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((h_exp, t_exp), c) in self.rep.terms() {
            let (sign, abs) = if c < &Rational::from_integer(0.into()) {
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
                write!(f, " {sign} ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if abs != rat_int(1) || (h_exp == 0 && t_exp == 0) {
                parts.push(render_rational(&abs));
            }
            match h_exp {
                0 => {}
                1 => parts.push("h".to_string()),
                _ => parts.push(format!("h^{h_exp}")),
            }
            match t_exp {
                0 => {}
                1 => parts.push("t".to_string()),
                _ => parts.push(format!("t^{t_exp}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Restrict a class to the coordinate fixed point e_i (1-based): substitute
/// h -> -a_i t. Requires distinct weights so the fixed point is isolated.
pub fn restrict_at_fixed_point(
    c: &EquivariantClass,
    index: usize,
    w: &AmbientWeights,
) -> Result<Poly> {
    w.require_distinct()?;
    let a_i = w.weight(index)?;
    Ok(c.rep.substitute_h(-a_i))
}

/// Total equivariant Chern class of the tangent bundle of P(V):
/// prod_j (1 + h + a_j t), reduced.
pub fn tangent_chern_class(w: &AmbientWeights) -> Result<EquivariantClass> {
    w.require_distinct()?;
    let mut p = Poly2::one();
    for &a in w.weights() {
        let mut factor = Poly2::one();
        factor.add_term(1, 0, rat_int(1));
        factor.add_term(0, 1, rat_int(a));
        p = p.mul(&factor);
    }
    Ok(EquivariantClass {
        rep: p.reduce(w.weights()),
    })
}

/// The product of the factors (1 + (a_j - a_i) t) over j != i: what the
/// tangent Chern class must restrict to at e_i.
pub fn euler_sequence_restriction(w: &AmbientWeights, index: usize) -> Result<Poly> {
    let tangent = w.tangent_weights_at(index)?;
    let mut p = Poly::one();
    for alpha in tangent {
        p = &p + &(&p * &Poly::monomial(1, rat_int(alpha)));
    }
    Ok(p)
}
