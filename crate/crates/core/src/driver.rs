//! Command drivers: each CLI subcommand as a pure function from input text
//! to a [`Report`] with parallel JSON and text renderings.
//!
//! Errors split into three kinds with distinct exit codes: unreadable input
//! and unusable models exit 1, while *mismatches* — the engine's exact
//! counts disagreeing with the closed-form predictions, or declared data
//! disagreeing with computed data — exit 2, so scripted checks can tell
//! "the input is bad" from "the numbers do not line up".

use std::fmt;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::blowup::{
    milnor_sum_on_exceptional, residual_polynomials, AxisCurve, BlowupChart, MultiplicityProfile,
};
use crate::chow::BlowupGeometry;
use crate::counts;
use crate::counts::CurveData;
use crate::deformation::{build_field_at, build_symbolic, verify_family, CompleteIntersectionData};
use crate::foliation::{isolated_milnor_total, CoordinateLine, ProjectiveFoliation};
use crate::input::{parse_problem, InputError, ProblemFile};
use crate::json::Value;
use crate::parser::parse_polynomial;
use crate::poly::MultiPoly;
use crate::rational::{format_rational, integer};
use crate::ring::PolyRing;

/// How a report is rendered to stdout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// A command result carrying both renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => self.json.render(),
        }
    }
}

/// A command failure, with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DriverError {
    /// The input file does not parse or is inconsistent (exit 1).
    Input(InputError),
    /// The input parses but does not define a usable model (exit 1).
    Model(String),
    /// Computed and expected values disagree (exit 2).
    Mismatch(String),
}

impl fmt::Display for DriverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DriverError::Input(e) => write!(f, "input error: {e}"),
            DriverError::Model(m) => write!(f, "model error: {m}"),
            DriverError::Mismatch(m) => write!(f, "mismatch: {m}"),
        }
    }
}

impl std::error::Error for DriverError {}

impl DriverError {
    pub fn exit_code(&self) -> i32 {
        match self {
            DriverError::Input(_) | DriverError::Model(_) => 1,
            DriverError::Mismatch(_) => 2,
        }
    }
}

/// Hex SHA-256 of the input text, as embedded in every report header.
pub fn sha256_hex(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// The typed pieces a command can require from a problem file.
struct Model {
    file: ProblemFile,
    digest: String,
    ring: Option<PolyRing>,
    foliation: Option<ProjectiveFoliation>,
    axis: Option<usize>,
}

impl Model {
    fn build(input: &str) -> Result<Model, DriverError> {
        let file = parse_problem(input).map_err(DriverError::Input)?;
        let digest = sha256_hex(input);
        let ring = if file.variables.is_empty() {
            None
        } else {
            Some(
                PolyRing::new(&file.variables)
                    .map_err(|e| DriverError::Model(e.to_string()))?,
            )
        };
        let foliation = if file.components.is_empty() {
            None
        } else {
            let ring = ring.as_ref().expect("components imply variables");
            let mut components = Vec::with_capacity(file.components.len());
            for (i, text) in file.components.iter().enumerate() {
                let p = parse_polynomial(ring, text).map_err(|e| {
                    DriverError::Model(format!("component {}: {e}", i + 1))
                })?;
                components.push(p);
            }
            Some(
                ProjectiveFoliation::from_chart0(ring.clone(), components, file.degree)
                    .map_err(|e| DriverError::Model(e.to_string()))?,
            )
        };
        let axis = match (&file.curve_axis, &ring) {
            (Some(name), Some(ring)) => ring.var_index(name),
            _ => None,
        };
        Ok(Model {
            file,
            digest,
            ring,
            foliation,
            axis,
        })
    }

    fn require_foliation(&self) -> Result<&ProjectiveFoliation, DriverError> {
        self.foliation
            .as_ref()
            .ok_or_else(|| DriverError::Model("the input defines no field components".into()))
    }

    fn require_axis(&self) -> Result<usize, DriverError> {
        self.axis
            .ok_or_else(|| DriverError::Model("the input has no `curve` block".into()))
    }

    fn header(&self, command: &str) -> (Value, Vec<String>) {
        let mut json = Value::obj(Vec::new());
        json.set("command", Value::str(command));
        json.set("input_sha256", Value::str(&self.digest));
        json.set("dimension", Value::int(self.file.dimension as i64));
        json.set("degree", Value::int(self.file.degree as i64));
        let text = vec![
            format!("command: {command}"),
            format!("input sha256: {}", self.digest),
            format!("dimension: {}", self.file.dimension),
            format!("degree: {}", self.file.degree),
        ];
        (json, text)
    }
}

fn poly_strings(polys: &[MultiPoly]) -> Vec<Value> {
    polys.iter().map(|p| Value::str(p.to_string())).collect()
}

/// Summarizes the field and, when a curve is given, classifies its behavior
/// along the curve: vanishing orders, case, twist, and residuals.
pub fn cmd_analyze(input: &str) -> Result<Report, DriverError> {
    let model = Model::build(input)?;
    let foliation = model.require_foliation()?;
    let (mut json, mut text) = model.header("analyze");
    let field = foliation.chart0();

    json.set(
        "variables",
        Value::Arr(model.file.variables.iter().map(Value::str).collect()),
    );
    json.set("components", Value::Arr(poly_strings(field.components())));
    text.push(format!("field: {field}"));

    if let Some(axis) = model.axis {
        let ring = field.ring();
        let curve =
            AxisCurve::new(ring.clone(), axis).map_err(|e| DriverError::Model(e.to_string()))?;
        let profile = MultiplicityProfile::new(&curve, field.components())
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let residuals = residual_polynomials(&curve, field.components())
            .map_err(|e| DriverError::Model(e.to_string()))?;

        let mut curve_json = Value::obj(Vec::new());
        curve_json.set("axis", Value::str(ring.var_name(axis)));
        curve_json.set(
            "orders",
            Value::Arr(
                profile
                    .orders()
                    .iter()
                    .map(|o| Value::str(o.to_string()))
                    .collect(),
            ),
        );
        curve_json.set("case", Value::str(profile.case().to_string()));
        curve_json.set("twist", Value::int(profile.twist() as i64));
        curve_json.set(
            "curve_multiplicity",
            Value::int(profile.curve_multiplicity() as i64),
        );
        curve_json.set("special", Value::Bool(profile.is_special()));
        curve_json.set(
            "residuals",
            Value::Arr(
                residuals
                    .residuals
                    .iter()
                    .map(|(pos, r)| {
                        let mut v = Value::obj(Vec::new());
                        v.set("component", Value::str(ring.var_name(*pos)));
                        v.set("value", Value::str(r.to_string()));
                        v
                    })
                    .collect(),
            ),
        );
        json.set("curve", curve_json);

        text.push(format!("curve axis: {}", ring.var_name(axis)));
        let orders: Vec<String> = profile.orders().iter().map(|o| o.to_string()).collect();
        text.push(format!("orders along curve: {}", orders.join(", ")));
        text.push(format!("case: {}", profile.case()));
        text.push(format!("twist: {}", profile.twist()));
        text.push(format!(
            "curve multiplicity: {}",
            profile.curve_multiplicity()
        ));
        for (pos, r) in &residuals.residuals {
            text.push(format!("residual[{}]: {r}", ring.var_name(*pos)));
        }
    }

    Ok(Report {
        json,
        text: text.join("\n"),
    })
}

/// Shows one blowup chart: the substitution, and the total and strict
/// transforms of the field.  `chart` is the 1-based position of a variable
/// normal to the curve.
pub fn cmd_blowup(input: &str, chart: usize) -> Result<Report, DriverError> {
    let model = Model::build(input)?;
    let foliation = model.require_foliation()?;
    let axis = model.require_axis()?;
    let field = foliation.chart0();
    let ring = field.ring();

    if chart == 0 || chart > ring.num_vars() {
        return Err(DriverError::Model(format!(
            "chart {chart} is out of range 1..={}",
            ring.num_vars()
        )));
    }
    let j = chart - 1;
    let curve =
        AxisCurve::new(ring.clone(), axis).map_err(|e| DriverError::Model(e.to_string()))?;
    let bc = BlowupChart::new(&curve, j).map_err(|e| DriverError::Model(e.to_string()))?;
    let total = bc
        .total_transform(field.components())
        .map_err(|e| DriverError::Model(e.to_string()))?;
    let strict = bc
        .strict_transform(field.components())
        .map_err(|e| DriverError::Model(e.to_string()))?;

    let (mut json, mut text) = model.header("blowup");
    json.set("chart", Value::int(chart as i64));
    json.set("direction", Value::str(ring.var_name(j)));
    json.set(
        "exceptional_coordinate",
        Value::str(bc.ring().var_name(j)),
    );
    json.set("substitution", Value::Arr(poly_strings(bc.substitution())));
    json.set("total_transform", Value::Arr(poly_strings(&total)));
    json.set("twist", Value::int(strict.divided_power as i64));
    json.set(
        "strict_transform",
        Value::Arr(poly_strings(&strict.components)),
    );

    text.push(format!("chart: {chart} (direction {})", ring.var_name(j)));
    text.push(format!(
        "exceptional coordinate: {}",
        bc.ring().var_name(j)
    ));
    for (p, s) in bc.substitution().iter().enumerate() {
        text.push(format!("  {} -> {s}", ring.var_name(p)));
    }
    text.push(format!(
        "total transform: ({})",
        total
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push(format!("twist: {}", strict.divided_power));
    text.push(format!(
        "strict transform: ({})",
        strict
            .components
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));

    Ok(Report {
        json,
        text: text.join("\n"),
    })
}

fn chart_counts_json(counts: &[(usize, u64)], names: &[&str]) -> Value {
    Value::Arr(
        counts
            .iter()
            .map(|&(j, c)| {
                let mut v = Value::obj(Vec::new());
                v.set("direction", Value::str(names[j]));
                v.set("count", Value::int(c as i64));
                v
            })
            .collect(),
    )
}

/// Counts singularities exactly — isolated points chart by chart, and the
/// restricted total on the exceptional divisor when a curve is given — and
/// compares everything against the closed-form predictions.
pub fn cmd_count(input: &str) -> Result<Report, DriverError> {
    let model = Model::build(input)?;
    let foliation = model.require_foliation()?;
    let (mut json, mut text) = model.header("count");
    let n = model.file.dimension as u32;
    let k = model.file.degree as i64;
    let mut mismatches: Vec<String> = Vec::new();

    if let Some(axis) = model.axis {
        let field = foliation.chart0();
        let ring = field.ring();
        let vanishing: Vec<usize> = (1..=model.file.dimension)
            .filter(|&i| i != axis + 1)
            .collect();
        let line = CoordinateLine::new(model.file.dimension, &vanishing)
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let isolated = isolated_milnor_total(foliation, &[line])
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let exceptional = milnor_sum_on_exceptional(foliation, axis)
            .map_err(|e| DriverError::Model(e.to_string()))?;

        let ell = exceptional.twist as i64;
        let expected_exceptional = counts::exceptional_milnor_total(n, k, ell, 1, 0);
        let expected_off = counts::off_curve_milnor_total(n, k, ell, 1, 0);
        let expected_blowup = counts::blowup_milnor_total(n, k, ell, 1, 0);
        let blowup_total = BigInt::from(exceptional.total) + BigInt::from(isolated.total);

        if let Some(declared) = model.file.curves.first() {
            if declared.ell != ell {
                mismatches.push(format!(
                    "declared twist {} differs from the computed twist {ell}",
                    declared.ell
                ));
            }
        }
        if BigInt::from(exceptional.total) != expected_exceptional {
            mismatches.push(format!(
                "exceptional total {} differs from the closed form {expected_exceptional}",
                exceptional.total
            ));
        }
        if BigInt::from(isolated.total) != expected_off {
            mismatches.push(format!(
                "isolated total {} differs from the off-curve closed form {expected_off}",
                isolated.total
            ));
        }
        if blowup_total != expected_blowup {
            mismatches.push(format!(
                "blow-up total {blowup_total} differs from the closed form {expected_blowup}"
            ));
        }

        let far_ring = foliation
            .chart_field(axis + 1)
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let near_names: Vec<&str> = (0..ring.num_vars()).map(|p| ring.var_name(p)).collect();
        let far_names: Vec<&str> = (0..ring.num_vars())
            .map(|p| far_ring.ring().var_name(p))
            .collect();

        let mut curve_json = Value::obj(Vec::new());
        curve_json.set("axis", Value::str(ring.var_name(axis)));
        curve_json.set("twist", Value::int(ell));
        json.set("curve", curve_json);
        let mut iso_json = Value::obj(Vec::new());
        iso_json.set(
            "per_chart",
            Value::Arr(isolated.per_chart.iter().map(|&c| Value::int(c as i64)).collect()),
        );
        iso_json.set("total", Value::int(isolated.total as i64));
        json.set("isolated", iso_json);
        let mut exc_json = Value::obj(Vec::new());
        exc_json.set(
            "near_charts",
            chart_counts_json(&exceptional.near_charts, &near_names),
        );
        exc_json.set(
            "far_charts",
            chart_counts_json(&exceptional.far_charts, &far_names),
        );
        exc_json.set("total", Value::int(exceptional.total as i64));
        json.set("exceptional", exc_json);
        json.set("blowup_total", Value::Int(blowup_total.clone()));
        let mut cf = Value::obj(Vec::new());
        cf.set("exceptional", Value::Int(expected_exceptional.clone()));
        cf.set("off_curve", Value::Int(expected_off.clone()));
        cf.set("blowup", Value::Int(expected_blowup.clone()));
        json.set("closed_forms", cf);
        json.set("agreement", Value::Bool(mismatches.is_empty()));

        text.push(format!("curve axis: {}", ring.var_name(axis)));
        text.push(format!("twist: {ell}"));
        let per: Vec<String> = isolated.per_chart.iter().map(u64::to_string).collect();
        text.push(format!(
            "isolated singularities by chart: {}",
            per.join(", ")
        ));
        text.push(format!("isolated total: {}", isolated.total));
        for &(j, c) in &exceptional.near_charts {
            text.push(format!("exceptional near chart {}: {c}", near_names[j]));
        }
        for &(j, c) in &exceptional.far_charts {
            text.push(format!("exceptional far chart {}: {c}", far_names[j]));
        }
        text.push(format!("exceptional total: {}", exceptional.total));
        text.push(format!("blow-up total: {blowup_total}"));
        text.push(format!(
            "closed forms: exceptional {expected_exceptional}, off-curve {expected_off}, blow-up {expected_blowup}"
        ));
        text.push(format!(
            "agreement: {}",
            if mismatches.is_empty() { "yes" } else { "no" }
        ));
    } else {
        let isolated = isolated_milnor_total(foliation, &[])
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let expected = counts::projective_milnor_total(n, k);
        if BigInt::from(isolated.total) != expected {
            mismatches.push(format!(
                "isolated total {} differs from the closed form {expected}",
                isolated.total
            ));
        }
        let mut iso_json = Value::obj(Vec::new());
        iso_json.set(
            "per_chart",
            Value::Arr(isolated.per_chart.iter().map(|&c| Value::int(c as i64)).collect()),
        );
        iso_json.set("total", Value::int(isolated.total as i64));
        json.set("isolated", iso_json);
        json.set("closed_form", Value::Int(expected.clone()));
        json.set("agreement", Value::Bool(mismatches.is_empty()));

        let per: Vec<String> = isolated.per_chart.iter().map(u64::to_string).collect();
        text.push(format!(
            "isolated singularities by chart: {}",
            per.join(", ")
        ));
        text.push(format!("isolated total: {}", isolated.total));
        text.push(format!("closed form: {expected}"));
        text.push(format!(
            "agreement: {}",
            if mismatches.is_empty() { "yes" } else { "no" }
        ));
    }

    if mismatches.is_empty() {
        Ok(Report {
            json,
            text: text.join("\n"),
        })
    } else {
        Err(DriverError::Mismatch(mismatches.join("; ")))
    }
}

/// Evaluates the closed-form counts for the file's numeric data: the
/// all-isolated total, each curve's exceptional/blow-up/off-curve counts
/// and contribution, and the grand total with warnings for unrealizable
/// data.
pub fn cmd_formulas(input: &str) -> Result<Report, DriverError> {
    let model = Model::build(input)?;
    let (mut json, mut text) = model.header("formulas");
    let n = model.file.dimension as u32;
    let k = model.file.degree as i64;

    let projective = counts::projective_milnor_total(n, k);
    json.set("projective_total", Value::Int(projective.clone()));
    text.push(format!("all-isolated total: {projective}"));

    let curves: Vec<CurveData> = model
        .file
        .curves
        .iter()
        .map(|c| CurveData {
            d: c.d,
            g: c.g,
            ell: c.ell,
            branches: c.branches.clone(),
        })
        .collect();
    let mut warnings: Vec<String> = Vec::new();
    let mut curves_json = Vec::with_capacity(curves.len());
    for (i, c) in curves.iter().enumerate() {
        let exceptional = counts::exceptional_milnor_total(n, k, c.ell, c.d, c.g);
        let blowup = counts::blowup_milnor_total(n, k, c.ell, c.d, c.g);
        let off = counts::off_curve_milnor_total(n, k, c.ell, c.d, c.g);
        let contribution = counts::curve_contribution(n, k, c);
        let mut v = Value::obj(Vec::new());
        v.set("d", Value::int(c.d));
        v.set("g", Value::int(c.g));
        v.set("ell", Value::int(c.ell));
        v.set(
            "branches",
            Value::Arr(c.branches.iter().map(|&b| Value::int(b)).collect()),
        );
        v.set("exceptional", Value::Int(exceptional.clone()));
        v.set("blowup", Value::Int(blowup.clone()));
        v.set("off_curve", Value::Int(off.clone()));
        v.set("contribution", Value::Int(contribution.clone()));
        curves_json.push(v);
        text.push(format!(
            "curve {} (d={}, g={}, ell={}): exceptional {exceptional}, blow-up {blowup}, off-curve {off}, contribution {contribution}",
            i + 1,
            c.d,
            c.g,
            c.ell
        ));
    }
    json.set("curves", Value::Arr(curves_json));

    let grand = counts::isolated_singularity_total(n, k, &curves);
    if grand < BigInt::from(0) {
        warnings.push(format!(
            "the grand total {grand} is negative: no foliation realizes this data with only isolated extra singularities"
        ));
    }
    json.set("grand_total", Value::Int(grand.clone()));
    json.set(
        "warnings",
        Value::Arr(warnings.iter().map(Value::str).collect()),
    );
    text.push(format!("grand total: {grand}"));
    for w in &warnings {
        text.push(format!("warning: {w}"));
    }

    Ok(Report {
        json,
        text: text.join("\n"),
    })
}

/// Checks the closed forms against independent intersection-theoretic
/// integrals over a parameter grid (plus any points from the input file).
/// Any disagreement is a mismatch (exit 2).
pub fn cmd_chow_verify(input: Option<&str>) -> Result<Report, DriverError> {
    let mut points: Vec<(u32, i64, i64, i64, i64)> = Vec::new();
    for n in [3u32, 4, 5] {
        for k in 1..=5i64 {
            for ell in 0..=3i64 {
                for d in 1..=4i64 {
                    for g in 0..=3i64 {
                        points.push((n, k, ell, d, g));
                    }
                }
            }
        }
    }
    let grid_size = points.len();

    let mut json = Value::obj(Vec::new());
    json.set("command", Value::str("chow-verify"));
    let mut text = vec!["command: chow-verify".to_string()];
    let mut extra = 0usize;
    if let Some(input) = input {
        let model = Model::build(input)?;
        json.set("input_sha256", Value::str(&model.digest));
        text.push(format!("input sha256: {}", model.digest));
        let n = model.file.dimension as u32;
        let k = model.file.degree as i64;
        for c in &model.file.curves {
            points.push((n, k, c.ell, c.d, c.g));
            extra += 1;
        }
    } else {
        json.set("input_sha256", Value::Null);
    }

    let mut failures: Vec<String> = Vec::new();
    for &(n, k, ell, d, g) in &points {
        let geom = BlowupGeometry::new(n, k, ell, d, g)
            .map_err(|e| DriverError::Model(e.to_string()))?;
        let chow_exc = crate::chow::exceptional_milnor_total(&geom);
        let form_exc = counts::exceptional_milnor_total(n, k, ell, d, g);
        if chow_exc != form_exc {
            failures.push(format!(
                "exceptional at (n={n}, k={k}, ell={ell}, d={d}, g={g}): integral {chow_exc}, closed form {form_exc}"
            ));
        }
        let chow_blowup = crate::chow::blowup_milnor_total(&geom);
        let form_blowup = counts::blowup_milnor_total(n, k, ell, d, g);
        if chow_blowup != form_blowup {
            failures.push(format!(
                "blow-up at (n={n}, k={k}, ell={ell}, d={d}, g={g}): integral {chow_blowup}, closed form {form_blowup}"
            ));
        }
    }

    json.set("grid_points", Value::int(grid_size as i64));
    json.set("extra_points", Value::int(extra as i64));
    json.set("failures", Value::int(failures.len() as i64));
    text.push(format!("grid points: {grid_size}"));
    text.push(format!("extra points: {extra}"));
    text.push(format!("failures: {}", failures.len()));

    if failures.is_empty() {
        Ok(Report {
            json,
            text: text.join("\n"),
        })
    } else {
        Err(DriverError::Mismatch(failures.join("; ")))
    }
}

/// Builds the deformation family from the input's `deformation` block and
/// reports the construction's checks: the defining linear system, base
/// agreement, degree preservation, and curve-ideal membership per sample.
pub fn cmd_deform(input: &str) -> Result<Report, DriverError> {
    let model = Model::build(input)?;
    let ring = model
        .ring
        .as_ref()
        .ok_or_else(|| DriverError::Model("the input defines no variables".into()))?;
    let block = model
        .file
        .deformation
        .as_ref()
        .ok_or_else(|| DriverError::Model("the input has no `deformation` block".into()))?;

    let parse_all = |texts: &[String], what: &str| -> Result<Vec<MultiPoly>, DriverError> {
        texts
            .iter()
            .enumerate()
            .map(|(i, t)| {
                parse_polynomial(ring, t)
                    .map_err(|e| DriverError::Model(format!("{what} {}: {e}", i + 1)))
            })
            .collect()
    };
    let f = parse_all(&block.equations, "equation")?;
    let h = parse_all(&block.perturbations, "perturbation")?;
    let field = parse_all(&block.field, "field component")?;
    let data = CompleteIntersectionData::new(ring.clone(), f, h)
        .map_err(|e| DriverError::Model(e.to_string()))?;

    let symbolic =
        build_symbolic(&field, &data).map_err(|e| DriverError::Model(e.to_string()))?;
    let base = build_field_at(&field, &data, &integer(0))
        .map_err(|e| DriverError::Model(e.to_string()))?;
    let report = verify_family(&field, &data, &block.parameters)
        .map_err(|e| DriverError::Model(e.to_string()))?;

    let (mut json, mut text) = model.header("deform");
    json.set("determinant", Value::str(symbolic.determinant().to_string()));
    json.set(
        "determinant_is_constant",
        Value::Bool(symbolic.determinant().is_constant()),
    );
    json.set("cramer_ok", Value::Bool(report.cramer_ok));
    json.set("base_matches", Value::Bool(report.base_matches));
    json.set("base_degree", Value::int(base.degree() as i64));
    json.set(
        "built_field",
        Value::Arr(poly_strings(base.components())),
    );
    json.set(
        "axis_orders",
        Value::Arr(
            report
                .field_axis_orders
                .iter()
                .map(|o| Value::str(o.to_string()))
                .collect(),
        ),
    );
    json.set(
        "samples",
        Value::Arr(
            report
                .samples
                .iter()
                .map(|s| {
                    let mut v = Value::obj(Vec::new());
                    v.set("t", Value::str(format_rational(&s.t)));
                    v.set("degree", Value::int(s.degree as i64));
                    v.set("degree_preserved", Value::Bool(s.degree_preserved));
                    v.set(
                        "component_in_curve_ideal",
                        Value::Arr(
                            s.component_in_curve_ideal
                                .iter()
                                .map(|&b| Value::Bool(b))
                                .collect(),
                        ),
                    );
                    v
                })
                .collect(),
        ),
    );

    text.push(format!("determinant: {}", symbolic.determinant()));
    text.push(format!(
        "linear system solved: {}",
        if report.cramer_ok { "yes" } else { "no" }
    ));
    text.push(format!(
        "base member matches the unperturbed family: {}",
        if report.base_matches { "yes" } else { "no" }
    ));
    text.push(format!("base field: {base}"));
    text.push(format!("base degree: {}", base.degree()));
    let orders: Vec<String> = report
        .field_axis_orders
        .iter()
        .map(|o| o.to_string())
        .collect();
    text.push(format!("axis orders: {}", orders.join(", ")));
    for s in &report.samples {
        let members: Vec<&str> = s
            .component_in_curve_ideal
            .iter()
            .map(|&b| if b { "yes" } else { "no" })
            .collect();
        text.push(format!(
            "t = {}: degree {} ({}), components in curve ideal: {}",
            format_rational(&s.t),
            s.degree,
            if s.degree_preserved {
                "preserved"
            } else {
                "changed"
            },
            members.join(", ")
        ));
    }

    Ok(Report {
        json,
        text: text.join("\n"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DEGREE2: &str = "\
dimension = 3
degree = 2
variables = z1, z2, z3
component = z1^2 + z1*z2 + z2^2
component = 2*z1*z2 + z2^2
component = z1*(1 + z1 + 2*z3) + z2*(1 + z2 + 3*z3)

curve {
  axis = z3
}

curve_data {
  d = 1
  g = 0
  ell = 1
}

deformation {
  f = z1
  f = z1^2 + z2
  h = 1
  h = z1^2
  field = z1
  field = z2
  field = z1*z3
  t = 0
  t = 1/2
}
";

    #[test]
    fn analyze_reports_the_classification() {
        let report = cmd_analyze(DEGREE2).unwrap();
        assert!(report.text.contains("case: ND-i special"));
        assert!(report.text.contains("twist: 1"));
        assert!(report.text.contains("orders along curve: 2, 2, 1"));
        assert!(report.text.contains("residual[z2]: -u2^3 + u2"));
        let json = report.json.render();
        assert!(json.contains("\"case\": \"ND-i special\""));
        assert!(json.contains("\"input_sha256\""));
    }

    #[test]
    fn blowup_shows_both_transforms() {
        let report = cmd_blowup(DEGREE2, 1).unwrap();
        assert!(report.text.contains("exceptional coordinate: u1"));
        assert!(report.text.contains("z2 -> u1*u2"));
        assert!(report.text.contains("twist: 1"));
        assert!(cmd_blowup(DEGREE2, 3).is_err());
        assert!(cmd_blowup(DEGREE2, 4).is_err());
    }

    #[test]
    fn count_agrees_with_the_closed_forms() {
        let report = cmd_count(DEGREE2).unwrap();
        assert!(report.text.contains("isolated total: 3"));
        assert!(report.text.contains("exceptional total: 6"));
        assert!(report.text.contains("blow-up total: 9"));
        assert!(report.text.contains("agreement: yes"));
        let json = report.json.render();
        assert!(json.contains("\"blowup_total\": 9"));
    }

    #[test]
    fn count_flags_a_wrong_declared_twist() {
        let tampered = DEGREE2.replace("ell = 1", "ell = 2");
        let err = cmd_count(&tampered).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("declared twist 2"));
    }

    #[test]
    fn count_without_a_curve_uses_the_projective_total() {
        let input = "\
dimension = 3
degree = 1
variables = z1, z2, z3
component = 2*z1 + 1
component = 3*z2 + 1
component = 5*z3 + 1
";
        let report = cmd_count(input).unwrap();
        assert!(report.text.contains("isolated total: 4"));
        assert!(report.text.contains("closed form: 4"));
        assert!(report.text.contains("agreement: yes"));
    }

    #[test]
    fn formulas_evaluate_closed_forms_and_warn_on_negative_totals() {
        let single = "\
dimension = 3
degree = 2
curve_data {
  d = 1
  g = 0
  ell = 1
}
";
        let report = cmd_formulas(single).unwrap();
        assert!(report.text.contains("all-isolated total: 15"));
        assert!(report
            .text
            .contains("exceptional 6, blow-up 9, off-curve 3, contribution -12"));
        assert!(report.text.contains("grand total: 3"));
        assert!(!report.text.contains("warning"));

        let double = format!("{single}curve_data {{\n  d = 1\n  g = 0\n  ell = 1\n}}\n");
        let report = cmd_formulas(&double).unwrap();
        assert!(report.text.contains("grand total: -9"));
        assert!(report.text.contains("warning"));
    }

    #[test]
    fn chow_verification_covers_the_grid() {
        let report = cmd_chow_verify(None).unwrap();
        assert!(report.text.contains("grid points: 960"));
        assert!(report.text.contains("failures: 0"));
        assert!(report.json.render().contains("\"input_sha256\": null"));

        let with_input = cmd_chow_verify(Some(
            "dimension = 4\ndegree = 3\ncurve_data {\n d = 5\n g = 6\n ell = 7\n}\n",
        ))
        .unwrap();
        assert!(with_input.text.contains("extra points: 1"));
        assert!(with_input.text.contains("failures: 0"));
    }

    #[test]
    fn deform_reports_family_checks() {
        let report = cmd_deform(DEGREE2).unwrap();
        assert!(report.text.contains("determinant: 1"));
        assert!(report.text.contains("linear system solved: yes"));
        assert!(report
            .text
            .contains("base member matches the unperturbed family: yes"));
        assert!(report
            .text
            .contains("t = 1/2: degree 2 (preserved), components in curve ideal: yes, yes, yes"));
    }

    #[test]
    fn missing_sections_are_model_errors() {
        let numbers_only = "dimension = 3\ndegree = 2\n";
        let e = cmd_analyze(numbers_only).unwrap_err();
        assert_eq!(e.exit_code(), 1);
        let e = cmd_deform(DEGREE2.split("deformation").next().unwrap()).unwrap_err();
        assert!(e.to_string().contains("deformation"));
        let bad = "dimension = 3\ndegree = 1\njunk\n";
        assert!(matches!(cmd_analyze(bad), Err(DriverError::Input(_))));
    }

    #[test]
    fn reports_render_in_both_formats() {
        let report = cmd_formulas("dimension = 3\ndegree = 1\n").unwrap();
        assert!(report.render(OutputFormat::Text).starts_with("command: formulas"));
        assert!(report.render(OutputFormat::Json).starts_with("{\n"));
        // Identical inputs produce identical bytes.
        let again = cmd_formulas("dimension = 3\ndegree = 1\n").unwrap();
        assert_eq!(
            report.render(OutputFormat::Json),
            again.render(OutputFormat::Json)
        );
    }
}
