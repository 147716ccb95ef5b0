//! Self-checking property suites behind `equicut verify`.
//!
//! Every suite either replays a pinned worked example or hammers a module
//! invariant with seeded random (or exhaustive) inputs, so a single command
//! cross-validates the whole pipeline without any external data. All suites
//! are deterministic for a fixed seed.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::charnum::{
    chern_restriction_cn1, euler_characteristic, todd_closed_form_comparator, todd_genus,
};
use crate::cut::{classify_affine_point, cut_fixed_inventory, psi_weight_check, AffineInstabilityType};
use crate::error::Error;
use crate::exact::laurent::LaurentSeries;
use crate::exact::poly::Poly;
use crate::exact::rational::{rat, rat_int, render_rational, Rational};
use crate::localization::ht_poly::defining_relation;
use crate::localization::{
    euler_sequence_restriction, kalkman_from_class, kalkman_integral, restrict_at_fixed_point,
    tangent_chern_class, total_residue, EquivariantClass, FixedPointDatum,
};
use crate::oracle::{
    a_invariant_sections_vanish, exact_degree_bound, find_invariant_monomial,
    invariant_monomial_exists,
};
use crate::weights::{
    is_free_on_stable, is_in_upper, is_stable, reweight, stabilizer_order, support_weights,
    AmbientWeights, StabilizerOrder, SupportPattern,
};

/// Default seed for the randomized suites.
pub const DEFAULT_SEED: u64 = 271_828;

/// Outcome of one named suite.
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

fn run(name: &'static str, body: impl FnOnce() -> Check) -> SuiteReport {
    match body() {
        Ok(detail) => SuiteReport {
            name,
            passed: true,
            detail,
        },
        Err(detail) => SuiteReport {
            name,
            passed: false,
            detail,
        },
    }
}

fn err_str(e: Error) -> String {
    format!("unexpected error: {e}")
}

fn rng_for(seed: u64, stream: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(stream))
}

/// Run every suite with the given seed, in a fixed order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    vec![
        run("exact-arith/invert-multiply-back", || {
            invert_multiply_back(rng_for(seed, 1), 64)
        }),
        run("exact-arith/residue-linearity", || {
            residue_linearity(rng_for(seed, 2), 64)
        }),
        run("exact-arith/truncation-soundness", || {
            truncation_soundness(rng_for(seed, 3), 32)
        }),
        run("weight-model/trichotomy", || {
            trichotomy(rng_for(seed, 4), 100)
        }),
        run("weight-model/reweight-soundness", || {
            reweight_soundness(rng_for(seed, 5), 500)
        }),
        run("weight-model/stability-monotonicity", || {
            stability_monotonicity(rng_for(seed, 6), 100)
        }),
        run("cut/boundary-compatibility", || {
            boundary_compatibility(rng_for(seed, 7), 100)
        }),
        run("cut/psi-zero-free", || psi_zero_free(rng_for(seed, 8), 100)),
        run("cut/upper-count", || upper_count(rng_for(seed, 9), 100)),
        run("localization/global-residue-zero", || {
            global_residue_zero(rng_for(seed, 10), 200)
        }),
        run("localization/euler-sequence-pin", || {
            euler_sequence_pin(rng_for(seed, 11), 100)
        }),
        run("localization/restriction-ring-map", || {
            restriction_ring_map(rng_for(seed, 12), 64)
        }),
        run("localization/relation-vanishes", || {
            relation_vanishes(rng_for(seed, 13), 64)
        }),
        run("char-numbers/chi-route-agreement", || {
            chi_route_agreement(rng_for(seed, 14), 100)
        }),
        run("char-numbers/todd-order-stability", || {
            todd_order_stability(rng_for(seed, 15), 50)
        }),
        run("char-numbers/corpus-values", corpus_values),
        run("oracle/criterion-equivalence", oracle_criterion_equivalence),
        run("oracle/section-vanishing", oracle_section_vanishing),
    ]
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Random input generators (also used by the acceptance tests).

/// Distinct weights, entries in [-bound, bound], length in [min_len, max_len].
pub fn random_distinct_weights(
    rng: &mut ChaCha20Rng,
    min_len: usize,
    max_len: usize,
    bound: i64,
) -> AmbientWeights {
    let len = rng.gen_range(min_len..=max_len);
    let mut weights: Vec<i64> = Vec::with_capacity(len);
    while weights.len() < len {
        let a = rng.gen_range(-bound..=bound);
        if !weights.contains(&a) {
            weights.push(a);
        }
    }
    AmbientWeights::new(weights).expect("nonempty")
}

/// Distinct nonzero weights.
pub fn random_nonzero_weights(
    rng: &mut ChaCha20Rng,
    min_len: usize,
    max_len: usize,
    bound: i64,
) -> AmbientWeights {
    loop {
        let w = random_distinct_weights(rng, min_len, max_len, bound);
        if !w.weights().contains(&0) {
            return w;
        }
    }
}

/// A level avoiding every weight, with small numerator and denominator.
pub fn random_regular_level(rng: &mut ChaCha20Rng, w: &AmbientWeights) -> Rational {
    loop {
        let num = rng.gen_range(-2 * 9..=2 * 9);
        let den = rng.gen_range(1..=4);
        let q = rat(num, den);
        if crate::weights::is_regular_level(w, &q) {
            return q;
        }
    }
}

fn random_pattern(rng: &mut ChaCha20Rng, n: usize) -> SupportPattern {
    let mut indices: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
    if indices.is_empty() {
        indices.push(rng.gen_range(1..=n));
    }
    SupportPattern::new(indices).expect("nonempty")
}

/// A nonzero homogeneous class of the degree the residue formula integrates
/// (one less than the dimension of the ambient space).
pub fn random_homogeneous_class(rng: &mut ChaCha20Rng, w: &AmbientWeights) -> EquivariantClass {
    let degree = w.dimension() - 1;
    loop {
        let mut terms = Vec::new();
        for h_exp in 0..=degree {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                terms.push((h_exp, degree - h_exp, rat_int(c)));
            }
        }
        if terms.is_empty() {
            continue;
        }
        let class = EquivariantClass::from_terms(terms, w);
        if !class.is_zero() {
            return class;
        }
    }
}

fn random_rational(rng: &mut ChaCha20Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_nonzero_rational(rng: &mut ChaCha20Rng) -> Rational {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(sign * rng.gen_range(1..=9), rng.gen_range(1..=9))
}

/// Series with the given window; the leading coefficient is nonzero.
fn random_series(rng: &mut ChaCha20Rng, valuation: i64, truncation: i64) -> LaurentSeries {
    let mut terms = vec![(valuation, random_nonzero_rational(rng))];
    for exp in valuation + 1..truncation {
        terms.push((exp, random_rational(rng)));
    }
    LaurentSeries::from_terms(terms, truncation)
}

// ---------------------------------------------------------------------------
// exact-arith

fn invert_multiply_back(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let v = rng.gen_range(-3..=3);
        let len = rng.gen_range(4..=8);
        let u = random_series(&mut rng, v, v + len);
        let inv = u.invert().map_err(err_str)?;
        let prod = u.mul(&inv);
        let one = LaurentSeries::one(prod.truncation_order());
        check(prod.sub(&one).is_zero_up_to_truncation(), || {
            format!("u * invert(u) != 1 for u = {u}")
        })?;
    }
    Ok(format!("{trials} random inversions verified by multiplication"))
}

fn residue_linearity(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let v = rng.gen_range(-4..=0);
        let truncation = rng.gen_range(1..=3);
        let a = random_series(&mut rng, v, truncation);
        let b = random_series(&mut rng, v, truncation);
        let c1 = random_rational(&mut rng);
        let c2 = random_rational(&mut rng);
        let lhs = a.scale(&c1).add(&b.scale(&c2)).residue().map_err(err_str)?;
        let rhs = &c1 * &a.residue().map_err(err_str)? + &c2 * &b.residue().map_err(err_str)?;
        check(lhs == rhs, || {
            format!("residue not linear on a = {a}, b = {b}")
        })?;
    }
    Ok(format!("{trials} random linear combinations"))
}

fn truncation_soundness(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let v = rng.gen_range(-3..=2);
        let len = rng.gen_range(4..=7);
        let master_a: Vec<(i64, Rational)> = (v..v + len)
            .map(|e| {
                (
                    e,
                    if e == v {
                        random_nonzero_rational(&mut rng)
                    } else {
                        random_rational(&mut rng)
                    },
                )
            })
            .collect();
        let master_b: Vec<(i64, Rational)> = (v..v + len)
            .map(|e| {
                (
                    e,
                    if e == v {
                        random_nonzero_rational(&mut rng)
                    } else {
                        random_rational(&mut rng)
                    },
                )
            })
            .collect();
        let t_small = v + len - 2;
        let t_big = t_small + 4;
        let a_small = LaurentSeries::from_terms(master_a.clone(), t_small);
        let a_big = LaurentSeries::from_terms(master_a, t_big);
        let b_small = LaurentSeries::from_terms(master_b.clone(), t_small);
        let b_big = LaurentSeries::from_terms(master_b, t_big);

        let p_small = a_small.mul(&b_small);
        let p_big = a_big.mul(&b_big);
        for exp in p_small.valuation()..p_small.truncation_order() {
            check(p_small.coeff(exp) == p_big.coeff(exp), || {
                format!("product coefficient t^{exp} depends on the truncation")
            })?;
        }

        let i_small = a_small.invert().map_err(err_str)?;
        let i_big = a_big.invert().map_err(err_str)?;
        for exp in i_small.valuation()..i_small.truncation_order() {
            check(i_small.coeff(exp) == i_big.coeff(exp), || {
                format!("inverse coefficient t^{exp} depends on the truncation")
            })?;
        }
    }
    Ok(format!(
        "{trials} product/inverse windows agree with higher-order recomputation"
    ))
}

// ---------------------------------------------------------------------------
// weight-model

fn trichotomy(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let q = random_regular_level(&mut rng, &w);
        let p = random_pattern(&mut rng, w.len());
        let pi = support_weights(&p, &w).map_err(err_str)?;
        let above = pi.iter().all(|&a| rat_int(a) > q);
        let below = pi.iter().all(|&a| rat_int(a) < q);
        let stable = is_stable(&p, &w, &q).map_err(err_str)?;
        let states = [stable, above, below];
        check(states.iter().filter(|&&s| s).count() == 1, || {
            format!(
                "trichotomy violated for weights {:?}, level {}, pattern {:?}",
                w.weights(),
                render_rational(&q),
                p.indices().collect::<Vec<_>>()
            )
        })?;
        let upper = is_in_upper(&p, &w, &q).map_err(err_str)?;
        check(upper == pi.iter().any(|&a| rat_int(a) > q), || {
            "upper-locus membership disagrees with the weight set".to_string()
        })?;
    }
    Ok(format!(
        "{trials} random patterns: exactly one of stable / all-above / all-below"
    ))
}

fn reweight_soundness(mut rng: ChaCha20Rng, trials: usize) -> Check {
    let zero = Rational::zero();
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let q = random_regular_level(&mut rng, &w);
        let w2 = reweight(&w, &q).map_err(err_str)?;
        for (&a, &a2) in w.weights().iter().zip(w2.weights()) {
            let side = rat_int(a) > q;
            check(side == (a2 > 0) && a2 != 0, || {
                format!(
                    "sign not preserved: weight {a} at level {} became {a2}",
                    render_rational(&q)
                )
            })?;
        }
        for p in SupportPattern::all(w.len()) {
            let before = is_stable(&p, &w, &q).map_err(err_str)?;
            let after = is_stable(&p, &w2, &zero).map_err(err_str)?;
            check(before == after, || {
                format!(
                    "stability changed under reweighting for weights {:?} at {}",
                    w.weights(),
                    render_rational(&q)
                )
            })?;
        }
    }
    Ok(format!(
        "{trials} reweightings preserve signs and pattern-by-pattern stability"
    ))
}

fn stability_monotonicity(mut rng: ChaCha20Rng, trials: usize) -> Check {
    let mut grown = 0usize;
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let q = random_regular_level(&mut rng, &w);
        for p in SupportPattern::all(w.len()) {
            if !is_stable(&p, &w, &q).map_err(err_str)? {
                continue;
            }
            let missing: Vec<usize> = (1..=w.len()).filter(|i| !p.contains(*i)).collect();
            if missing.is_empty() {
                continue;
            }
            let extra = missing[rng.gen_range(0..missing.len())];
            let bigger =
                SupportPattern::new(p.indices().chain([extra])).map_err(err_str)?;
            check(is_stable(&bigger, &w, &q).map_err(err_str)?, || {
                format!(
                    "enlarging a stable pattern lost stability for weights {:?}",
                    w.weights()
                )
            })?;
            grown += 1;
        }
    }
    Ok(format!("{grown} stable patterns stayed stable after growing"))
}

// ---------------------------------------------------------------------------
// cut-construction

fn boundary_compatibility(mut rng: ChaCha20Rng, trials: usize) -> Check {
    let zero = Rational::zero();
    for _ in 0..trials {
        let w = random_nonzero_weights(&mut rng, 2, 6, 9);
        for p in SupportPattern::all(w.len()) {
            let at_zero = classify_affine_point(&p, &w, true).map_err(err_str)?;
            check(
                (at_zero == AffineInstabilityType::Stable)
                    == is_stable(&p, &w, &zero).map_err(err_str)?,
                || {
                    format!(
                        "zero-section stability mismatch for weights {:?}",
                        w.weights()
                    )
                },
            )?;
            let off_zero = classify_affine_point(&p, &w, false).map_err(err_str)?;
            check(
                (off_zero == AffineInstabilityType::Stable)
                    == is_in_upper(&p, &w, &zero).map_err(err_str)?,
                || {
                    format!(
                        "off-zero stability != upper-locus membership for weights {:?}",
                        w.weights()
                    )
                },
            )?;
        }
    }
    Ok(format!(
        "{trials} weight vectors: affine classification matches stability and the upper locus"
    ))
}

fn psi_zero_free(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_nonzero_weights(&mut rng, 2, 6, 9);
        let n_twist = w.max_weight() + rng.gen_range(1..=5);
        let psi = psi_weight_check(&w, n_twist).map_err(err_str)?;
        check(psi.zero_free, || {
            format!(
                "zero weight in the twisted sum for weights {:?}, twist {n_twist}",
                w.weights()
            )
        })?;
        check(
            psi.diagonal.len() == 2 * w.len() && psi.antidiagonal.len() == 2 * w.len(),
            || "twisted weight lists have the wrong length".to_string(),
        )?;
        check(
            psi_weight_check(&w, w.max_weight()).is_err(),
            || "twist at the maximal weight should be rejected".to_string(),
        )?;
    }
    Ok(format!(
        "{trials} twists above the maximal weight are zero-free"
    ))
}

fn upper_count(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let q = random_regular_level(&mut rng, &w);
        let inventory = cut_fixed_inventory(&w, &q).map_err(err_str)?;
        let above: Vec<usize> = (1..=w.len())
            .filter(|&i| rat_int(w.weights()[i - 1]) > q)
            .collect();
        check(
            inventory.upper_fixed.len() == above.len(),
            || {
                format!(
                    "wrong number of upper fixed points for weights {:?} at {}",
                    w.weights(),
                    render_rational(&q)
                )
            },
        )?;
        for (point, &i) in inventory.upper_fixed.iter().zip(&above) {
            let expected: Vec<i64> = w
                .weights()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j + 1 != i)
                .map(|(_, &a)| a - w.weights()[i - 1])
                .collect();
            check(
                point.index == i
                    && point.label == format!("e{i}")
                    && point.ambient_weight == w.weights()[i - 1]
                    && point.tangent_weights == expected,
                || format!("inventory entry for e{i} is wrong"),
            )?;
        }
        let any_below = w.weights().iter().any(|&a| rat_int(a) < q);
        check(
            inventory.reduced_present == (any_below && !above.is_empty()),
            || "reduced-space presence flag is wrong".to_string(),
        )?;
    }
    Ok(format!(
        "{trials} inventories match a direct weight-by-weight count"
    ))
}

// ---------------------------------------------------------------------------
// localization-engine

fn global_residue_zero(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let class = random_homogeneous_class(&mut rng, &w);
        let total = total_residue(&w, &class).map_err(err_str)?;
        check(total.is_zero(), || {
            format!(
                "nonzero total residue {} for weights {:?} and class {class}",
                render_rational(&total),
                w.weights()
            )
        })?;
    }
    Ok(format!(
        "{trials} random classes: residues over all fixed points sum to zero"
    ))
}

fn euler_sequence_pin(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 6, 9);
        let chern = tangent_chern_class(&w).map_err(err_str)?;
        for i in 1..=w.len() {
            let via_class = restrict_at_fixed_point(&chern, i, &w).map_err(err_str)?;
            let via_sequence = euler_sequence_restriction(&w, i).map_err(err_str)?;
            check(via_class == via_sequence, || {
                format!(
                    "tangent Chern restriction at e{i} disagrees for weights {:?}",
                    w.weights()
                )
            })?;
        }
    }
    Ok(format!(
        "{trials} weight vectors: both tangent Chern restrictions agree at every fixed point"
    ))
}

fn random_class(rng: &mut ChaCha20Rng, w: &AmbientWeights) -> EquivariantClass {
    let terms: Vec<(usize, usize, Rational)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            (
                rng.gen_range(0..=w.dimension()),
                rng.gen_range(0..=2),
                rat_int(rng.gen_range(-5..=5)),
            )
        })
        .collect();
    EquivariantClass::from_terms(terms, w)
}

fn restriction_ring_map(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 5, 9);
        let c1 = random_class(&mut rng, &w);
        let c2 = random_class(&mut rng, &w);
        let i = rng.gen_range(1..=w.len());
        let r1 = restrict_at_fixed_point(&c1, i, &w).map_err(err_str)?;
        let r2 = restrict_at_fixed_point(&c2, i, &w).map_err(err_str)?;
        let r_sum = restrict_at_fixed_point(&c1.add(&c2), i, &w).map_err(err_str)?;
        let r_prod = restrict_at_fixed_point(&c1.mul(&c2, &w), i, &w).map_err(err_str)?;
        check(r_sum == &r1 + &r2, || {
            format!("restriction is not additive at e{i} for weights {:?}", w.weights())
        })?;
        check(r_prod == &r1 * &r2, || {
            format!(
                "restriction is not multiplicative at e{i} for weights {:?}",
                w.weights()
            )
        })?;
    }
    Ok(format!("{trials} random pairs: restriction is a ring map"))
}

fn relation_vanishes(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 5, 9);
        let relation = defining_relation(w.weights());
        let class = EquivariantClass::from_terms(
            relation.terms().map(|((h, t), c)| (h, t, c.clone())),
            &w,
        );
        check(class.is_zero(), || {
            format!(
                "defining product does not reduce to zero for weights {:?}",
                w.weights()
            )
        })?;
    }
    Ok(format!(
        "{trials} weight vectors: defining product reduces to zero"
    ))
}

// ---------------------------------------------------------------------------
// char-numbers

fn chi_route_agreement(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let w = random_distinct_weights(&mut rng, 2, 5, 9);
        let q = random_regular_level(&mut rng, &w);
        let inventory = cut_fixed_inventory(&w, &q).map_err(err_str)?;
        let mut unit_data = Vec::new();
        let mut chern_data = Vec::new();
        for point in &inventory.upper_fixed {
            unit_data.push(
                FixedPointDatum::from_poly(
                    point.label.clone(),
                    point.tangent_weights.clone(),
                    &Poly::one(),
                )
                .map_err(err_str)?,
            );
            chern_data.push(
                FixedPointDatum::from_poly(
                    point.label.clone(),
                    point.tangent_weights.clone(),
                    &chern_restriction_cn1(&point.tangent_weights),
                )
                .map_err(err_str)?,
            );
        }
        let direct = euler_characteristic(&unit_data);
        let via_residues = kalkman_integral(&chern_data).map_err(err_str)?;
        check(direct == via_residues, || {
            format!(
                "Euler characteristic routes disagree for weights {:?} at {}: {} vs {}",
                w.weights(),
                render_rational(&q),
                render_rational(&direct),
                render_rational(&via_residues)
            )
        })?;
    }
    Ok(format!(
        "{trials} scenarios: tangent-weight sum equals the residue of the top Chern restriction"
    ))
}

fn todd_order_stability(mut rng: ChaCha20Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let n_points = rng.gen_range(1..=3);
        let mut data = Vec::new();
        for k in 0..n_points {
            let n_weights = rng.gen_range(1..=3);
            let tangent: Vec<i64> = (0..n_weights)
                .map(|_| {
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    sign * rng.gen_range(1..=6)
                })
                .collect();
            data.push(
                FixedPointDatum::from_poly(format!("p{k}"), tangent, &Poly::one())
                    .map_err(err_str)?,
            );
        }
        let min_order = data
            .iter()
            .map(|p| p.tangent_weights.len() as i64 + 2)
            .max()
            .unwrap_or(3);
        let low = todd_genus(&data, min_order).map_err(err_str)?;
        let high = todd_genus(&data, min_order + 3).map_err(err_str)?;
        check(low == high, || {
            format!(
                "Todd genus changed with the working order: {} vs {}",
                render_rational(&low),
                render_rational(&high)
            )
        })?;
    }
    Ok(format!(
        "{trials} random fixed-point sets: Todd genus independent of the working order"
    ))
}

fn p1_upper() -> std::result::Result<Vec<FixedPointDatum>, String> {
    Ok(vec![FixedPointDatum::from_poly(
        "e2",
        vec![-1],
        &Poly::one(),
    )
    .map_err(err_str)?])
}

fn product_surface_data() -> std::result::Result<Vec<FixedPointDatum>, String> {
    let minus_t = Poly::monomial(1, rat_int(-1));
    Ok(vec![
        FixedPointDatum::from_poly("e2xe1", vec![-1, 1], &minus_t).map_err(err_str)?,
        FixedPointDatum::from_poly("e2xe2", vec![-1, -1], &minus_t).map_err(err_str)?,
        FixedPointDatum::from_poly("e1xe2", vec![1, -1], &Poly::zero()).map_err(err_str)?,
    ])
}

fn corpus_values() -> Check {
    let mut assertions = 0usize;
    let mut assert_eq_rat = |label: &str, got: Rational, want: Rational| {
        assertions += 1;
        check(got == want, || {
            format!(
                "{label}: got {}, want {}",
                render_rational(&got),
                render_rational(&want)
            )
        })
    };

    // Geometric series window: invert(1 - exp(-t)).
    let one_minus_exp = LaurentSeries::one(5).sub(&LaurentSeries::exp(&rat_int(-1), 5));
    let inv = one_minus_exp.invert().map_err(err_str)?;
    for (exp, want) in [
        (-1, rat_int(1)),
        (0, rat(1, 2)),
        (1, rat(1, 12)),
        (2, rat_int(0)),
    ] {
        assert_eq_rat(&format!("geometric-series coefficient t^{exp}"), inv.coeff(exp), want)?;
    }

    // The projective line split at 1/2.
    let w01 = AmbientWeights::new(vec![0, 1]).map_err(err_str)?;
    let half = rat(1, 2);
    let p1 = p1_upper()?;
    assert_eq_rat("line chi", euler_characteristic(&p1), rat_int(1))?;
    assert_eq_rat("line todd", todd_genus(&p1, 4).map_err(err_str)?, rat_int(1))?;
    let line_kalkman =
        kalkman_from_class(&w01, &half, &EquivariantClass::one()).map_err(err_str)?;
    assert_eq_rat("line kalkman", line_kalkman.value, rat_int(1))?;
    check(line_kalkman.reduced_present, || {
        "line reduced space should be present".to_string()
    })?;
    check(is_free_on_stable(&w01, &half).map_err(err_str)?, || {
        "line action should be free on the stable locus".to_string()
    })?;

    // Product-of-lines fixed-point data.
    let surface = product_surface_data()?;
    assert_eq_rat("surface chi", euler_characteristic(&surface), rat_int(2))?;
    assert_eq_rat(
        "surface todd",
        todd_genus(&surface, 5).map_err(err_str)?,
        rat_int(1),
    )?;
    assert_eq_rat(
        "surface kalkman",
        kalkman_integral(&surface).map_err(err_str)?,
        rat_int(0),
    )?;

    // Weighted quotient with a non-free action.
    let w012 = AmbientWeights::new(vec![0, 1, 2]).map_err(err_str)?;
    let q32 = rat(3, 2);
    check(!is_free_on_stable(&w012, &q32).map_err(err_str)?, || {
        "level 3/2 should not act freely".to_string()
    })?;
    let inventory = cut_fixed_inventory(&w012, &q32).map_err(err_str)?;
    check(
        inventory.upper_fixed.len() == 1
            && inventory.upper_fixed[0].tangent_weights == vec![-2, -1],
        || "wrong inventory above 3/2".to_string(),
    )?;
    let teardrop = vec![FixedPointDatum::from_poly("e3", vec![-2, -1], &Poly::one())
        .map_err(err_str)?];
    assert_eq_rat("teardrop chi", euler_characteristic(&teardrop), rat(3, 2))?;
    let two_pattern = SupportPattern::new([1, 3]).map_err(err_str)?;
    check(
        stabilizer_order(&two_pattern, &w012).map_err(err_str)? == StabilizerOrder::Finite(2),
        || "stabilizer of the {1,3} pattern should have order 2".to_string(),
    )?;

    // Chamber independence of the hyperplane degree.
    let h = EquivariantClass::hyperplane(&w012);
    for (num, den) in [(1, 4), (1, 2), (3, 4)] {
        let value = kalkman_from_class(&w012, &rat(num, den), &h).map_err(err_str)?;
        assert_eq_rat(&format!("hyperplane degree at {num}/{den}"), value.value, rat_int(0))?;
    }

    // Empty reduced space: every weight above the level.
    let w123 = AmbientWeights::new(vec![1, 2, 3]).map_err(err_str)?;
    let empty = kalkman_from_class(&w123, &Rational::zero(), &EquivariantClass::hyperplane(&w123))
        .map_err(err_str)?;
    check(!empty.reduced_present, || {
        "reduced space at level 0 should be empty".to_string()
    })?;
    assert_eq_rat("empty-quotient kalkman", empty.value, rat_int(0))?;

    // Symmetric weights: order-2 stabilizer everywhere, half-integer values.
    let wpm = AmbientWeights::new(vec![-1, 1]).map_err(err_str)?;
    let zero = Rational::zero();
    check(!is_free_on_stable(&wpm, &zero).map_err(err_str)?, || {
        "symmetric weights should not act freely".to_string()
    })?;
    let sym = kalkman_from_class(&wpm, &zero, &EquivariantClass::one()).map_err(err_str)?;
    assert_eq_rat("symmetric kalkman", sym.value, rat(1, 2))?;
    let sym_upper = vec![FixedPointDatum::from_poly("e2", vec![-2], &Poly::one())
        .map_err(err_str)?];
    assert_eq_rat("symmetric chi", euler_characteristic(&sym_upper), rat(1, 2))?;

    // Closed-form comparator verdicts.
    let line_cmp = todd_closed_form_comparator(&p1, 4).map_err(err_str)?;
    assert_eq_rat("line comparator series", line_cmp.series_value.clone(), rat_int(1))?;
    assert_eq_rat("line comparator closed form", line_cmp.closed_form_value.clone(), rat_int(0))?;
    check(!line_cmp.agree, || {
        "line comparator should disagree".to_string()
    })?;
    let pair = vec![FixedPointDatum::from_poly("p", vec![1, 1], &Poly::one()).map_err(err_str)?];
    let pair_cmp = todd_closed_form_comparator(&pair, 5).map_err(err_str)?;
    assert_eq_rat("equal-weight comparator series", pair_cmp.series_value.clone(), rat_int(-1))?;
    check(pair_cmp.agree, || {
        "equal-weight comparator should agree".to_string()
    })?;
    let mixed = vec![FixedPointDatum::from_poly("p", vec![1, 2], &Poly::one()).map_err(err_str)?];
    let mixed_cmp = todd_closed_form_comparator(&mixed, 5).map_err(err_str)?;
    assert_eq_rat("mixed comparator series", mixed_cmp.series_value.clone(), rat(-3, 4))?;
    assert_eq_rat(
        "mixed comparator closed form",
        mixed_cmp.closed_form_value.clone(),
        rat(-5, 4),
    )?;
    check(!mixed_cmp.agree, || {
        "mixed comparator should disagree".to_string()
    })?;

    // Reweighting the standard example.
    let shifted = reweight(&w012, &half).map_err(err_str)?;
    check(shifted.weights() == [-1, 1, 3], || {
        format!("reweighted example gave {:?}", shifted.weights())
    })?;
    let witness = find_invariant_monomial(
        &two_pattern,
        &shifted,
        exact_degree_bound(&two_pattern, &shifted).map_err(err_str)?,
    )
    .map_err(err_str)?;
    check(
        witness
            .as_ref()
            .is_some_and(|m| m.to_string() == "x1^3*x3" && m.degree == 4),
        || format!("expected witness x1^3*x3, got {witness:?}"),
    )?;

    Ok(format!("{assertions} pinned values plus structural checks"))
}

// ---------------------------------------------------------------------------
// oracle

const SMALL_NONZERO: [i64; 8] = [-4, -3, -2, -1, 1, 2, 3, 4];

/// Every weight vector of length 1..=4 with (possibly repeated) nonzero
/// entries in [-4, 4].
fn for_each_small_vector(
    mut f: impl FnMut(&AmbientWeights) -> std::result::Result<(), String>,
) -> std::result::Result<usize, String> {
    let mut count = 0usize;
    for len in 1..=4usize {
        let mut odometer = vec![0usize; len];
        loop {
            let weights: Vec<i64> = odometer.iter().map(|&d| SMALL_NONZERO[d]).collect();
            let w = AmbientWeights::new(weights).expect("nonempty");
            f(&w)?;
            count += 1;
            let mut pos = 0;
            loop {
                if pos == len {
                    break;
                }
                odometer[pos] += 1;
                if odometer[pos] < SMALL_NONZERO.len() {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    Ok(count)
}

fn oracle_criterion_equivalence() -> Check {
    let zero = Rational::zero();
    let mut checks = 0usize;
    let vectors = for_each_small_vector(|w| {
        for p in SupportPattern::all(w.len()) {
            let stable = is_stable(&p, w, &zero).map_err(err_str)?;
            let bound = exact_degree_bound(&p, w).map_err(err_str)?;
            let exists = invariant_monomial_exists(&p, w, bound).map_err(err_str)?;
            check(stable == exists, || {
                format!(
                    "criterion and monomial search disagree for weights {:?}, pattern {:?}",
                    w.weights(),
                    p.indices().collect::<Vec<_>>()
                )
            })?;
            checks += 1;
        }
        Ok(())
    })?;
    Ok(format!(
        "{checks} pattern checks across {vectors} weight vectors agree exactly"
    ))
}

fn oracle_section_vanishing() -> Check {
    let mut checks = 0usize;
    let vectors = for_each_small_vector(|w| {
        for p in SupportPattern::all(w.len()) {
            for z_is_zero in [true, false] {
                for degree in 1..=4 {
                    match a_invariant_sections_vanish(&p, w, z_is_zero, degree) {
                        Ok(vanishes) => {
                            check(vanishes, || {
                                format!(
                                    "invariant section of degree {degree} survives on an \
                                     unstable stratum: weights {:?}, pattern {:?}, z_is_zero \
                                     {z_is_zero}",
                                    w.weights(),
                                    p.indices().collect::<Vec<_>>()
                                )
                            })?;
                            checks += 1;
                        }
                        Err(Error::NotUnstableType) => break,
                        Err(e) => return Err(err_str(e)),
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{checks} vanishing checks across {vectors} weight vectors"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_seed_passes_every_suite() {
        for suite in run_all(DEFAULT_SEED) {
            assert!(suite.passed, "suite {} failed: {}", suite.name, suite.detail);
        }
    }

    #[test]
    fn suite_list_is_stable() {
        let names: Vec<&str> = run_all(DEFAULT_SEED).iter().map(|s| s.name).collect();
        assert_eq!(names.len(), 18);
        assert!(names.contains(&"localization/global-residue-zero"));
        assert!(names.contains(&"oracle/criterion-equivalence"));
    }

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = rng_for(7, 99);
        for _ in 0..20 {
            let w = random_distinct_weights(&mut rng, 2, 6, 9);
            assert!(w.len() >= 2 && w.len() <= 6);
            assert!(!w.has_repeats());
            let q = random_regular_level(&mut rng, &w);
            assert!(crate::weights::is_regular_level(&w, &q));
            let c = random_homogeneous_class(&mut rng, &w);
            assert_eq!(c.homogeneous_degree(), Some(w.dimension() - 1));
        }
    }
}
