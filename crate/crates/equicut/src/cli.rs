//! Batch command-line front end: scenario files in, exact reports out.
//!
//! Reports are plain "key = value" lines (or the same data as sorted-key
//! JSON with --format json); all rationals render as "p/q" in lowest terms,
//! so identical scenario files always produce byte-identical reports.
//!
//! Exit codes: 0 success, 2 validation or input error, 3 property-suite
//! failure from `verify`, 4 series precision exhausted.

use std::fmt::Display;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::charnum::{euler_characteristic, todd_closed_form_comparator};
use crate::cut::cut_fixed_inventory;
use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::{render_rational, Rational};
use crate::localization::{
    kalkman_from_class, kalkman_integral, EquivariantClass, FixedPointDatum,
};
use crate::oracle::{exact_degree_bound, find_invariant_monomial};
use crate::scenario::{FixedPointInput, Scenario, ScenarioData};
use crate::verify;
use crate::weights::{
    is_free_on_stable, is_in_upper, is_stable, reweight, stabilizer_order, AmbientWeights,
    SupportPattern,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "equicut",
    version,
    about = "Exact stability, cut-space fixed points, residue formulas, and \
             characteristic numbers for one-parameter torus actions on projective space"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every support pattern at the scenario's level
    Stability(ScenarioArgs),
    /// Fixed-point inventory of the cut space
    Inventory(ScenarioArgs),
    /// Degree of a class on the reduced space via the residue formula
    Kalkman(ScenarioArgs),
    /// Euler characteristic of the reduced space
    Euler(ScenarioArgs),
    /// Todd genus of the reduced space
    Todd(ScenarioArgs),
    /// Invariant-monomial search checked against the stability criterion
    Oracle(ScenarioArgs),
    /// Run the property suites of every module
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ScenarioArgs {
    /// Path to a scenario JSON file
    scenario: PathBuf,
    /// Series working order (todd); defaults to the smallest sound order
    #[arg(long)]
    order: Option<i64>,
    /// Degree cap for the monomial search (oracle); defaults to the exact
    /// per-pattern bound
    #[arg(long)]
    dmax: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the randomized suites
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Parse arguments, run, print the report, and return the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, code)) => {
            print!("{report}");
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InsufficientPrecision { .. } | Error::OrderTooSmall { .. } => 4,
                _ => 2,
            }
        }
    }
}

fn run(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Stability(args) => scenario_command(&args, "stability", cmd_stability),
        Command::Inventory(args) => scenario_command(&args, "inventory", cmd_inventory),
        Command::Kalkman(args) => scenario_command(&args, "kalkman", cmd_kalkman),
        Command::Euler(args) => scenario_command(&args, "euler", cmd_euler),
        Command::Todd(args) => scenario_command(&args, "todd", cmd_todd),
        Command::Oracle(args) => scenario_command(&args, "oracle", cmd_oracle),
        Command::Verify(args) => {
            let (report, all_passed) = cmd_verify(args.seed);
            Ok((report.render(args.format), if all_passed { 0 } else { 3 }))
        }
    }
}

fn scenario_command(
    args: &ScenarioArgs,
    name: &'static str,
    body: impl FnOnce(&Scenario, &ScenarioArgs, &mut Report) -> Result<()>,
) -> Result<(String, i32)> {
    for (flag, value) in [("order", args.order), ("dmax", args.dmax)] {
        if value.is_some_and(|v| v < 1) {
            return Err(Error::InvalidScenario(format!("--{flag} must be at least 1")));
        }
    }
    let scenario = Scenario::from_path(&args.scenario)?;
    let mut report = Report::new(name);
    header(&scenario, &mut report);
    body(&scenario, args, &mut report)?;
    Ok((report.render(args.format), 0))
}

/// Accumulates the text lines and the JSON object of one report in parallel.
struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        let mut report = Report {
            lines: Vec::new(),
            json: Map::new(),
        };
        report.field(command, "command", command);
        report
    }

    /// Text line "key = text" plus a JSON entry under the same key.
    fn field(&mut self, value: impl Into<Value>, key: &str, text: impl Display) {
        self.lines.push(format!("{key} = {text}"));
        self.json.insert(key.to_string(), value.into());
    }

    fn field_str(&mut self, key: &str, value: impl Display) {
        let s = value.to_string();
        self.field(s.clone(), key, s);
    }

    fn field_rational(&mut self, key: &str, value: &Rational) {
        self.field_str(key, render_rational(value));
    }

    /// Text-only annotation line (labels, warnings, per-item listings).
    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn json_only(&mut self, key: &str, value: Value) {
        self.json.insert(key.to_string(), value);
    }

    fn render(self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = self.lines.join("\n");
                out.push('\n');
                out
            }
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&Value::Object(self.json))
                    .expect("report serializes");
                out.push('\n');
                out
            }
        }
    }
}

fn render_ints(values: &[i64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn pattern_text(p: &SupportPattern) -> String {
    let parts: Vec<String> = p.indices().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn pattern_json(p: &SupportPattern) -> Value {
    Value::Array(p.indices().map(|i| json!(i)).collect())
}

fn sorted_patterns(n: usize) -> Vec<SupportPattern> {
    let mut patterns = SupportPattern::all(n);
    patterns.sort_by_key(|p| (p.len(), p.indices().collect::<Vec<_>>()));
    patterns
}

fn header(scenario: &Scenario, report: &mut Report) {
    if let Some(d) = &scenario.description {
        report.field_str("description", d);
    }
    match &scenario.data {
        ScenarioData::ProjectiveSpace { weights } => {
            report.field_str("mode", "projective_space");
            report.field(
                Value::Array(weights.weights().iter().map(|&a| json!(a)).collect()),
                "weights",
                render_ints(weights.weights()),
            );
        }
        ScenarioData::FixedPointData { points } => {
            report.field_str("mode", "fixed_point_data");
            report.field(json!(points.len()), "fixed_points", points.len());
        }
    }
    if let Some(q) = &scenario.level {
        report.field_rational("level", q);
    }
}

/// Upper fixed-point data of a projective scenario, with unit restrictions
/// (enough for the characteristic-number commands).
fn projective_upper(w: &AmbientWeights, q: &Rational) -> Result<(Vec<FixedPointDatum>, bool)> {
    let inventory = cut_fixed_inventory(w, q)?;
    let mut upper = Vec::with_capacity(inventory.upper_fixed.len());
    for point in &inventory.upper_fixed {
        upper.push(FixedPointDatum::from_poly(
            point.label.clone(),
            point.tangent_weights.clone(),
            &Poly::one(),
        )?);
    }
    Ok((upper, inventory.reduced_present))
}

fn data_upper(points: &[FixedPointInput]) -> Result<Vec<FixedPointDatum>> {
    points
        .iter()
        .map(|p| FixedPointDatum::from_poly(p.label.clone(), p.tangent_weights.clone(), &p.restriction))
        .collect()
}

const ORBIFOLD_LABEL: &str = "orbifold (non-free action; rational-coefficient value)";
const EMPTY_REDUCED_WARNING: &str =
    "warning: reduced space is empty (no stable points at this level)";

/// Emit the orbifold label for a non-free projective scenario and the
/// empty-quotient warning; returns nothing but records both in the JSON.
fn quotient_flags(
    w: &AmbientWeights,
    q: &Rational,
    reduced_present: bool,
    report: &mut Report,
) -> Result<()> {
    let free = is_free_on_stable(w, q)?;
    report.json_only("orbifold", json!(!free));
    report.json_only("reduced_present", json!(reduced_present));
    if !free {
        report.note(ORBIFOLD_LABEL);
    }
    if !reduced_present {
        report.note(EMPTY_REDUCED_WARNING);
    }
    Ok(())
}

fn cmd_stability(scenario: &Scenario, _args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    let w = scenario.require_projective()?;
    let q = scenario.require_level()?;
    let free = is_free_on_stable(w, q)?;
    report.field(json!(free), "free_on_stable", free);

    let mut stable_count = 0usize;
    let mut entries = Vec::new();
    for pattern in sorted_patterns(w.len()) {
        let (status, order) = if is_stable(&pattern, w, q)? {
            stable_count += 1;
            let order = stabilizer_order(&pattern, w)?;
            (
                format!("stable (stabilizer order {order})"),
                json!({
                    "indices": pattern_json(&pattern),
                    "status": "stable",
                    "stabilizer_order": order.to_string(),
                }),
            )
        } else if is_in_upper(&pattern, w, q)? {
            (
                "unstable (all weights above level)".to_string(),
                json!({ "indices": pattern_json(&pattern), "status": "above_level" }),
            )
        } else {
            (
                "unstable (all weights below level)".to_string(),
                json!({ "indices": pattern_json(&pattern), "status": "below_level" }),
            )
        };
        report.note(format!("pattern {}: {status}", pattern_text(&pattern)));
        entries.push(order);
    }
    report.json_only("patterns", Value::Array(entries));
    report.field(json!(stable_count), "stable_patterns", stable_count);
    Ok(())
}

fn cmd_inventory(scenario: &Scenario, _args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    let w = scenario.require_projective()?;
    let q = scenario.require_level()?;
    let inventory = cut_fixed_inventory(w, q)?;
    report.field(
        json!(inventory.upper_fixed.len()),
        "upper_fixed_count",
        inventory.upper_fixed.len(),
    );
    let mut entries = Vec::new();
    for point in &inventory.upper_fixed {
        report.note(format!(
            "upper {}: ambient_weight = {}, tangent_weights = {}",
            point.label,
            point.ambient_weight,
            render_ints(&point.tangent_weights)
        ));
        entries.push(json!({
            "label": point.label,
            "ambient_weight": point.ambient_weight,
            "tangent_weights": point.tangent_weights,
        }));
    }
    report.json_only("upper_fixed", Value::Array(entries));
    report.field(
        json!(inventory.reduced_present),
        "reduced_present",
        inventory.reduced_present,
    );
    report.field(
        json!(inventory.reduced_normal_weight),
        "reduced_normal_weight",
        inventory.reduced_normal_weight,
    );
    Ok(())
}

fn cmd_kalkman(scenario: &Scenario, _args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    match &scenario.data {
        ScenarioData::ProjectiveSpace { weights } => {
            let q = scenario.require_level()?;
            let spec = scenario.class_spec.as_deref().ok_or_else(|| {
                Error::InvalidScenario("kalkman needs a class_spec in projective_space mode".into())
            })?;
            let class = EquivariantClass::parse(spec, weights)?;
            report.field_str("class", &class);
            let out = kalkman_from_class(weights, q, &class)?;
            quotient_flags(weights, q, out.reduced_present, report)?;
            report.field_rational("kalkman", &out.value);
        }
        ScenarioData::FixedPointData { points } => {
            let upper = data_upper(points)?;
            let value = kalkman_integral(&upper)?;
            report.field_rational("kalkman", &value);
        }
    }
    Ok(())
}

fn cmd_euler(scenario: &Scenario, _args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    let upper = match &scenario.data {
        ScenarioData::ProjectiveSpace { weights } => {
            let q = scenario.require_level()?;
            let (upper, reduced_present) = projective_upper(weights, q)?;
            report.field(json!(upper.len()), "upper_fixed_count", upper.len());
            quotient_flags(weights, q, reduced_present, report)?;
            upper
        }
        ScenarioData::FixedPointData { points } => data_upper(points)?,
    };
    report.field_rational("chi", &euler_characteristic(&upper));
    Ok(())
}

fn cmd_todd(scenario: &Scenario, args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    let upper = match &scenario.data {
        ScenarioData::ProjectiveSpace { weights } => {
            let q = scenario.require_level()?;
            let (upper, reduced_present) = projective_upper(weights, q)?;
            report.field(json!(upper.len()), "upper_fixed_count", upper.len());
            quotient_flags(weights, q, reduced_present, report)?;
            upper
        }
        ScenarioData::FixedPointData { points } => data_upper(points)?,
    };
    let min_sound = upper
        .iter()
        .map(|p| p.tangent_weights.len() as i64 + 2)
        .max()
        .unwrap_or(3);
    let order = args.order.or(scenario.order).unwrap_or(min_sound);
    report.field(json!(order), "order", order);
    let comparison = todd_closed_form_comparator(&upper, order)?;
    report.field_rational("todd", &comparison.series_value);
    report.field_rational("series_value", &comparison.series_value);
    report.field_rational("closed_form_value", &comparison.closed_form_value);
    report.field(
        json!(comparison.agree),
        "closed_form_agrees",
        comparison.agree,
    );
    Ok(())
}

fn cmd_oracle(scenario: &Scenario, args: &ScenarioArgs, report: &mut Report) -> Result<()> {
    let original = scenario.require_projective()?;
    let q = scenario.require_level()?;
    crate::weights::require_regular(original, q)?;
    let w = reweight(original, q)?;
    report.field(
        Value::Array(w.weights().iter().map(|&a| json!(a)).collect()),
        "reweighted_weights",
        render_ints(w.weights()),
    );
    let cap_override = args.dmax.or(scenario.dmax);
    match cap_override {
        Some(d) => report.field(json!(d), "degree_cap", d),
        None => report.field(json!("exact"), "degree_cap", "exact"),
    }

    let zero = Rational::from_integer(0.into());
    let mut agree_count = 0usize;
    let mut total = 0usize;
    let mut entries = Vec::new();
    for pattern in sorted_patterns(w.len()) {
        let stable = is_stable(&pattern, &w, &zero)?;
        let cap = match cap_override {
            Some(d) => d,
            None => exact_degree_bound(&pattern, &w)?,
        };
        let witness = find_invariant_monomial(&pattern, &w, cap)?;
        let agree = stable == witness.is_some();
        total += 1;
        if agree {
            agree_count += 1;
        }
        let witness_text = match &witness {
            Some(m) => format!("{m} (degree {})", m.degree),
            None => "none".to_string(),
        };
        report.note(format!(
            "pattern {}: stable = {stable}, invariant_monomial = {witness_text}, agree = {agree}",
            pattern_text(&pattern)
        ));
        entries.push(json!({
            "indices": pattern_json(&pattern),
            "stable": stable,
            "invariant_monomial": witness.as_ref().map(|m| m.to_string()),
            "degree": witness.as_ref().map(|m| m.degree),
            "agree": agree,
        }));
    }
    report.json_only("patterns", Value::Array(entries));
    report.field(
        json!(agree_count == total),
        "agreement",
        format!("{agree_count}/{total}"),
    );
    Ok(())
}

fn cmd_verify(seed: u64) -> (Report, bool) {
    let mut report = Report::new("verify");
    report.field(json!(seed), "seed", seed);
    let results = verify::run_all(seed);
    let mut entries = Vec::new();
    let mut passed = 0usize;
    for suite in &results {
        let status = if suite.passed { "pass" } else { "FAIL" };
        report.note(format!("suite {}: {status} ({})", suite.name, suite.detail));
        entries.push(json!({
            "name": suite.name,
            "passed": suite.passed,
            "detail": suite.detail,
        }));
        if suite.passed {
            passed += 1;
        }
    }
    report.json_only("suites", Value::Array(entries));
    let all_passed = passed == results.len();
    report.field(
        json!(all_passed),
        "suites_passed",
        format!("{passed}/{}", results.len()),
    );
    (report, all_passed)
}
