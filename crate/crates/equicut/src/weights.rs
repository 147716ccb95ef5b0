//! Integer-weight model of a one-parameter torus action on projective space.
//!
//! A point of P(V) is abstracted to its support pattern — the set of indices
//! of its nonzero coordinates — since stability only depends on the set of
//! weights over that support. All level comparisons are exact rational
//! comparisons, so wall values are never misclassified.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::rational::Rational;

/// Weights a_1..a_n of the torus action on the coordinates of V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientWeights {
    weights: Vec<i64>,
}

impl AmbientWeights {
    /// Duplicates are permitted here; operations that need isolated fixed
    /// points reject them via `require_distinct`.
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        Ok(AmbientWeights { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty vectors
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weight at a 1-based coordinate index.
    pub fn weight(&self, index: usize) -> Result<i64> {
        if index == 0 || index > self.weights.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.weights.len(),
            });
        }
        Ok(self.weights[index - 1])
    }

    /// Dimension of P(V).
    pub fn dimension(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn max_weight(&self) -> i64 {
        *self.weights.iter().max().expect("nonempty")
    }

    pub fn has_repeats(&self) -> bool {
        let set: BTreeSet<i64> = self.weights.iter().copied().collect();
        set.len() != self.weights.len()
    }

    /// Isolated fixed points need pairwise-distinct weights.
    pub fn require_distinct(&self) -> Result<()> {
        if self.has_repeats() {
            Err(Error::RepeatedWeights)
        } else {
            Ok(())
        }
    }

    pub fn require_nonzero(&self) -> Result<()> {
        match self.weights.iter().position(|a| *a == 0) {
            Some(pos) => Err(Error::ZeroWeight { index: pos + 1 }),
            None => Ok(()),
        }
    }

    /// Tangent weights {a_j - a_i : j != i} at the coordinate fixed point
    /// e_i (1-based), in coordinate order.
    pub fn tangent_weights_at(&self, index: usize) -> Result<Vec<i64>> {
        self.require_distinct()?;
        let a_i = self.weight(index)?;
        Ok(self
            .weights
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != index)
            .map(|(_, &a_j)| a_j - a_i)
            .collect())
    }
}

/// Nonempty set of 1-based coordinate indices where a point is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportPattern {
    indices: BTreeSet<usize>,
}

impl SupportPattern {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(SupportPattern { indices })
    }

    pub fn singleton(index: usize) -> Self {
        SupportPattern {
            indices: BTreeSet::from([index]),
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty sets
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.contains(&index)
    }

    /// All 2^n - 1 nonempty patterns on {1..n}. Exponential; intended for
    /// the brute-force enumerations over small n.
    pub fn all(n: usize) -> Vec<SupportPattern> {
        assert!((1..=20).contains(&n), "pattern enumeration needs 1 <= n <= 20");
        (1u32..(1u32 << n))
            .map(|mask| SupportPattern {
                indices: (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
            })
            .collect()
    }
}

/// The weight set Pi(x) of a point with the given support.
pub fn support_weights(p: &SupportPattern, w: &AmbientWeights) -> Result<BTreeSet<i64>> {
    p.indices().map(|i| w.weight(i)).collect()
}

/// A level is regular when it is not an ambient weight.
pub fn is_regular_level(w: &AmbientWeights, q: &Rational) -> bool {
    !w.weights
        .iter()
        .any(|&a| Rational::from_integer(BigInt::from(a)) == *q)
}

pub(crate) fn require_regular(w: &AmbientWeights, q: &Rational) -> Result<()> {
    for (pos, &a) in w.weights.iter().enumerate() {
        if Rational::from_integer(BigInt::from(a)) == *q {
            return Err(Error::NonRegularLevel {
                level: q.to_string(),
                index: pos + 1,
            });
        }
    }
    Ok(())
}

/// Stability at a regular level: the weight set must contain weights both
/// above and below q.
pub fn is_stable(p: &SupportPattern, w: &AmbientWeights, q: &Rational) -> Result<bool> {
    require_regular(w, q)?;
    let pi = support_weights(p, w)?;
    let above = pi
        .iter()
        .any(|&a| Rational::from_integer(BigInt::from(a)) > *q);
    let below = pi
        .iter()
        .any(|&a| Rational::from_integer(BigInt::from(a)) < *q);
    Ok(above && below)
}

/// Membership in the open locus X_{>q}: some weight of the point exceeds q.
pub fn is_in_upper(p: &SupportPattern, w: &AmbientWeights, q: &Rational) -> Result<bool> {
    let pi = support_weights(p, w)?;
    Ok(pi
        .iter()
        .any(|&a| Rational::from_integer(BigInt::from(a)) > *q))
}

/// Replace the action by its n-th Veronese twist so that cutting at q = a/n
/// becomes cutting at 0: a_i' = n*a_i - a. Signs of a_i - q are preserved.
pub fn reweight(w: &AmbientWeights, q: &Rational) -> Result<AmbientWeights> {
    let a = q.numer();
    let n = q.denom();
    let weights = w
        .weights
        .iter()
        .map(|&a_i| {
            let v: BigInt = n * BigInt::from(a_i) - a;
            i64::try_from(&v).map_err(|_| Error::Overflow)
        })
        .collect::<std::result::Result<Vec<i64>, Error>>()?;
    AmbientWeights::new(weights)
}

/// Order of the generic stabilizer of a point with the given support.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerOrder {
    Finite(i64),
    /// The whole torus fixes the point (its weight set is a singleton).
    Infinite,
}

impl fmt::Display for StabilizerOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerOrder::Finite(d) => write!(f, "{d}"),
            StabilizerOrder::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Singleton weight set: the point is fixed, stabilizer is all of T.
/// Otherwise the stabilizer is the cyclic group of order gcd of the pairwise
/// weight differences.
pub fn stabilizer_order(p: &SupportPattern, w: &AmbientWeights) -> Result<StabilizerOrder> {
    let pi: Vec<i64> = support_weights(p, w)?.into_iter().collect();
    if pi.len() == 1 {
        return Ok(StabilizerOrder::Infinite);
    }
    let mut g: i64 = 0;
    for (k, &a) in pi.iter().enumerate() {
        for &b in &pi[k + 1..] {
            g = g.gcd(&(a - b).abs());
        }
    }
    Ok(StabilizerOrder::Finite(g))
}

/// True when every pattern stable at level q has trivial stabilizer, i.e.
/// the torus acts freely on the stable locus.
pub fn is_free_on_stable(w: &AmbientWeights, q: &Rational) -> Result<bool> {
    require_regular(w, q)?;
    for p in SupportPattern::all(w.len()) {
        if is_stable(&p, w, q)? && stabilizer_order(&p, w)? != StabilizerOrder::Finite(1) {
            return Ok(false);
        }
    }
    Ok(true)
}
