//! Scenario files: the JSON input format of the CLI.
//!
//! A scenario either names a projective space by its ambient weights or
//! supplies fixed-point data directly (labels, tangent weights, restriction
//! coefficients). All rationals travel as strings like "3/4" so files stay
//! exact and byte-stable; floating point never appears.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::{parse_rational, Rational};
use crate::weights::AmbientWeights;

/// Upper bound on the number of ambient weights accepted from scenario
/// files; pattern enumeration is exponential in this count.
pub const MAX_SCENARIO_WEIGHTS: usize = 16;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    mode: String,
    description: Option<String>,
    weights: Option<Vec<i64>>,
    level_q: Option<String>,
    class_spec: Option<String>,
    fixed_points: Option<Vec<RawFixedPoint>>,
    order: Option<i64>,
    dmax: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixedPoint {
    label: String,
    tangent_weights: Vec<i64>,
    restriction_coeffs: Option<Vec<String>>,
}

/// One fixed point as supplied by a scenario file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointInput {
    pub label: String,
    pub tangent_weights: Vec<i64>,
    /// Restriction of the class at this point, ascending coefficients in t.
    /// Defaults to the constant 1 when the file omits it.
    pub restriction: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScenarioData {
    ProjectiveSpace { weights: AmbientWeights },
    FixedPointData { points: Vec<FixedPointInput> },
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub data: ScenarioData,
    pub level: Option<Rational>,
    pub class_spec: Option<String>,
    pub order: Option<i64>,
    pub dmax: Option<i64>,
    pub description: Option<String>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidScenario(msg.into())
}

impl Scenario {
    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let raw: RawScenario = serde_json::from_str(src)?;
        let data = match raw.mode.as_str() {
            "projective_space" => {
                if raw.fixed_points.is_some() {
                    return Err(invalid(
                        "projective_space scenarios must not carry fixed_points",
                    ));
                }
                let weights = raw
                    .weights
                    .ok_or_else(|| invalid("projective_space scenarios need a weights list"))?;
                if weights.len() > MAX_SCENARIO_WEIGHTS {
                    return Err(invalid(format!(
                        "at most {MAX_SCENARIO_WEIGHTS} ambient weights are supported"
                    )));
                }
                ScenarioData::ProjectiveSpace {
                    weights: AmbientWeights::new(weights)
                        .map_err(|_| invalid("weights list must be nonempty"))?,
                }
            }
            "fixed_point_data" => {
                if raw.weights.is_some() {
                    return Err(invalid(
                        "fixed_point_data scenarios must not carry ambient weights",
                    ));
                }
                if raw.class_spec.is_some() {
                    return Err(invalid(
                        "fixed_point_data scenarios carry restrictions per point, not a class_spec",
                    ));
                }
                let raw_points = raw
                    .fixed_points
                    .ok_or_else(|| invalid("fixed_point_data scenarios need fixed_points"))?;
                if raw_points.is_empty() {
                    return Err(invalid("fixed_points must be nonempty"));
                }
                let mut points = Vec::with_capacity(raw_points.len());
                for rp in raw_points {
                    if rp.tangent_weights.is_empty() {
                        return Err(invalid(format!(
                            "fixed point {:?} has no tangent weights",
                            rp.label
                        )));
                    }
                    if rp.tangent_weights.contains(&0) {
                        return Err(invalid(format!(
                            "fixed point {:?} has a zero tangent weight",
                            rp.label
                        )));
                    }
                    let restriction = match rp.restriction_coeffs {
                        None => Poly::one(),
                        Some(coeffs) => {
                            let parsed: Result<Vec<Rational>> =
                                coeffs.iter().map(|s| parse_rational(s)).collect();
                            Poly::from_ascending(parsed?)
                        }
                    };
                    points.push(FixedPointInput {
                        label: rp.label,
                        tangent_weights: rp.tangent_weights,
                        restriction,
                    });
                }
                ScenarioData::FixedPointData { points }
            }
            other => {
                return Err(invalid(format!(
                    "mode must be \"projective_space\" or \"fixed_point_data\", found {other:?}"
                )))
            }
        };

        let level = raw.level_q.as_deref().map(parse_rational).transpose()?;
        if let Some(order) = raw.order {
            if order < 1 {
                return Err(invalid("order must be at least 1"));
            }
        }
        if let Some(dmax) = raw.dmax {
            if dmax < 1 {
                return Err(invalid("dmax must be at least 1"));
            }
        }
        Ok(Scenario {
            data,
            level,
            class_spec: raw.class_spec,
            order: raw.order,
            dmax: raw.dmax,
            description: raw.description,
        })
    }

    pub fn require_level(&self) -> Result<&Rational> {
        self.level
            .as_ref()
            .ok_or_else(|| invalid("this command needs a level_q field"))
    }

    pub fn require_projective(&self) -> Result<&AmbientWeights> {
        match &self.data {
            ScenarioData::ProjectiveSpace { weights } => Ok(weights),
            ScenarioData::FixedPointData { .. } => Err(invalid(
                "this command needs a projective_space scenario",
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    #[test]
    fn parses_projective_scenario() {
        let s = Scenario::from_json(
            r#"{
                "mode": "projective_space",
                "description": "line at one half",
                "weights": [0, 1],
                "level_q": "1/2",
                "class_spec": "1"
            }"#,
        )
        .unwrap();
        assert_eq!(s.require_projective().unwrap().weights(), &[0, 1]);
        assert_eq!(s.require_level().unwrap(), &rat(1, 2));
        assert_eq!(s.class_spec.as_deref(), Some("1"));
    }

    #[test]
    fn parses_fixed_point_scenario() {
        let s = Scenario::from_json(
            r#"{
                "mode": "fixed_point_data",
                "fixed_points": [
                    {"label": "a", "tangent_weights": [-1, 1], "restriction_coeffs": ["0", "-1"]},
                    {"label": "b", "tangent_weights": [1, -1]}
                ]
            }"#,
        )
        .unwrap();
        let ScenarioData::FixedPointData { points } = &s.data else {
            panic!("expected fixed point data");
        };
        assert_eq!(points.len(), 2);
        assert_eq!(
            points[0].restriction,
            Poly::monomial(1, rat_int(-1))
        );
        assert_eq!(points[1].restriction, Poly::one());
        assert!(s.require_level().is_err());
        assert!(s.require_projective().is_err());
    }

    #[test]
    fn rejects_malformed_scenarios() {
        // not JSON at all
        assert!(Scenario::from_json("not json").is_err());
        // unknown field
        assert!(Scenario::from_json(
            r#"{"mode": "projective_space", "weights": [0, 1], "wieghts": [1]}"#
        )
        .is_err());
        // unknown mode
        assert!(Scenario::from_json(r#"{"mode": "affine", "weights": [0, 1]}"#).is_err());
        // missing weights
        assert!(Scenario::from_json(r#"{"mode": "projective_space"}"#).is_err());
        // zero tangent weight
        assert!(Scenario::from_json(
            r#"{"mode": "fixed_point_data",
                "fixed_points": [{"label": "a", "tangent_weights": [0]}]}"#
        )
        .is_err());
        // floating point snuck into a rational slot
        assert!(Scenario::from_json(
            r#"{"mode": "projective_space", "weights": [0, 1], "level_q": "0.5"}"#
        )
        .is_err());
        // bad order
        assert!(Scenario::from_json(
            r#"{"mode": "projective_space", "weights": [0, 1], "order": 0}"#
        )
        .is_err());
    }
}
