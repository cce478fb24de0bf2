//! Problem files: a small line-oriented description of a field, a curve in
//! its singular locus, and optional numeric and deformation data.
//!
//! The format is `key = value` pairs with `#` comments, plus brace blocks:
//!
//! ```text
//! # A field on P^3, chart 0.
//! dimension = 3
//! degree = 2
//! variables = z1, z2, z3
//! component = z1^2 + z1*z2 + z2^2
//! component = 2*z1*z2 + z2^2
//! component = z1*(1 + z1 + 2*z3) + z2*(1 + z2 + 3*z3)
//!
//! curve {
//!   axis = z3
//! }
//!
//! curve_data {
//!   d = 1
//!   g = 0
//!   ell = 1
//! }
//! ```
//!
//! Repeated `component` lines list the field components in variable order.
//! `curve` names the coordinate axis contained in the singular locus;
//! `curve_data` blocks (repeatable) carry the numeric invariants of a curve
//! for the closed-form counts, with an optional comma-separated `branches`
//! list of multiplicities.  A `deformation` block provides equations `f`,
//! perturbations `h`, a model `field`, and parameter samples `t`, each line
//! repeatable.  Polynomials stay unparsed strings here; they acquire a ring
//! only once a model is built.

use std::fmt;

use crate::rational::{parse_rational, Rational};

/// A parse or consistency error, with its 1-based line when attributable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn err(line: usize, message: impl Into<String>) -> InputError {
    InputError {
        line,
        message: message.into(),
    }
}

/// Numeric invariants of one curve: degree, genus, twist, and branch
/// multiplicities of its non-transverse points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveNumbers {
    pub d: i64,
    pub g: i64,
    pub ell: i64,
    pub branches: Vec<i64>,
}

/// The raw deformation block: equations, perturbations, a model field, and
/// parameter samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationInput {
    pub equations: Vec<String>,
    pub perturbations: Vec<String>,
    pub field: Vec<String>,
    pub parameters: Vec<Rational>,
}

/// A parsed problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    /// Ambient projective dimension `n`.
    pub dimension: usize,
    /// Foliation degree `k`.
    pub degree: u32,
    /// Chart-0 variable names, one per dimension (may be empty when only
    /// numeric data is supplied).
    pub variables: Vec<String>,
    /// Field components as unparsed polynomial strings.
    pub components: Vec<String>,
    /// The variable whose axis is the curve, when a `curve` block is given.
    pub curve_axis: Option<String>,
    /// Numeric curve invariants, one entry per `curve_data` block.
    pub curves: Vec<CurveNumbers>,
    /// The deformation block, when given.
    pub deformation: Option<DeformationInput>,
}

fn split_key_value(line: &str, lineno: usize) -> Result<(&str, &str), InputError> {
    match line.split_once('=') {
        Some((key, value)) => Ok((key.trim(), value.trim())),
        None => Err(err(lineno, format!("expected `key = value`, got `{line}`"))),
    }
}

fn parse_int<T: std::str::FromStr>(value: &str, lineno: usize, what: &str) -> Result<T, InputError> {
    value
        .parse::<T>()
        .map_err(|_| err(lineno, format!("{what} must be an integer, got `{value}`")))
}

fn parse_int_list(value: &str, lineno: usize, what: &str) -> Result<Vec<i64>, InputError> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|s| parse_int::<i64>(s.trim(), lineno, what))
        .collect()
}

struct CurveDataBlock {
    line: usize,
    d: Option<i64>,
    g: Option<i64>,
    ell: Option<i64>,
    branches: Vec<i64>,
}

/// Parses a problem file.  `dimension` and `degree` are required; all other
/// sections are optional but internally consistent (component counts,
/// variable counts, value ranges).
pub fn parse_problem(text: &str) -> Result<ProblemFile, InputError> {
    let mut dimension: Option<(usize, usize)> = None;
    let mut degree: Option<u32> = None;
    let mut variables: Vec<String> = Vec::new();
    let mut variables_line = 0usize;
    let mut components: Vec<String> = Vec::new();
    let mut components_line = 0usize;
    let mut curve_axis: Option<(usize, String)> = None;
    let mut curve_blocks: Vec<CurveDataBlock> = Vec::new();
    let mut deformation: Option<DeformationInput> = None;
    let mut deformation_line = 0usize;

    let mut block: Option<(String, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some((name, _)) = &block {
            if line == "}" {
                block = None;
                continue;
            }
            let (key, value) = split_key_value(line, lineno)?;
            match (name.as_str(), key) {
                ("curve", "axis") => {
                    if curve_axis.is_some() {
                        return Err(err(lineno, "the curve axis is already set"));
                    }
                    curve_axis = Some((lineno, value.to_string()));
                }
                ("curve_data", "d") => {
                    curve_blocks.last_mut().unwrap().d =
                        Some(parse_int(value, lineno, "`d`")?);
                }
                ("curve_data", "g") => {
                    curve_blocks.last_mut().unwrap().g =
                        Some(parse_int(value, lineno, "`g`")?);
                }
                ("curve_data", "ell") => {
                    curve_blocks.last_mut().unwrap().ell =
                        Some(parse_int(value, lineno, "`ell`")?);
                }
                ("curve_data", "branches") => {
                    let branches = parse_int_list(value, lineno, "each branch multiplicity")?;
                    if branches.iter().any(|&b| b < 1) {
                        return Err(err(lineno, "branch multiplicities must be at least 1"));
                    }
                    curve_blocks.last_mut().unwrap().branches = branches;
                }
                ("deformation", "f") => {
                    deformation.as_mut().unwrap().equations.push(value.to_string());
                }
                ("deformation", "h") => {
                    deformation
                        .as_mut()
                        .unwrap()
                        .perturbations
                        .push(value.to_string());
                }
                ("deformation", "field") => {
                    deformation.as_mut().unwrap().field.push(value.to_string());
                }
                ("deformation", "t") => {
                    let r = parse_rational(value)
                        .map_err(|e| err(lineno, format!("bad parameter value: {e}")))?;
                    deformation.as_mut().unwrap().parameters.push(r);
                }
                (block_name, key) => {
                    return Err(err(
                        lineno,
                        format!("unknown key `{key}` in `{block_name}` block"),
                    ));
                }
            }
            continue;
        }

        if let Some(name) = line.strip_suffix('{') {
            let name = name.trim();
            match name {
                "curve" => {}
                "curve_data" => curve_blocks.push(CurveDataBlock {
                    line: lineno,
                    d: None,
                    g: None,
                    ell: None,
                    branches: Vec::new(),
                }),
                "deformation" => {
                    if deformation.is_some() {
                        return Err(err(lineno, "only one `deformation` block is allowed"));
                    }
                    deformation = Some(DeformationInput {
                        equations: Vec::new(),
                        perturbations: Vec::new(),
                        field: Vec::new(),
                        parameters: Vec::new(),
                    });
                    deformation_line = lineno;
                }
                other => return Err(err(lineno, format!("unknown block `{other}`"))),
            }
            block = Some((name.to_string(), lineno));
            continue;
        }

        let (key, value) = split_key_value(line, lineno)?;
        match key {
            "dimension" => {
                dimension = Some((lineno, parse_int(value, lineno, "`dimension`")?));
            }
            "degree" => {
                degree = Some(parse_int(value, lineno, "`degree`")?);
            }
            "variables" => {
                variables_line = lineno;
                variables = value
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .collect();
                if variables.iter().any(String::is_empty) {
                    return Err(err(lineno, "empty variable name"));
                }
            }
            "component" => {
                if value.is_empty() {
                    return Err(err(lineno, "empty component"));
                }
                components_line = lineno;
                components.push(value.to_string());
            }
            other => return Err(err(lineno, format!("unknown key `{other}`"))),
        }
    }

    if let Some((_, line)) = block {
        return Err(err(line, "unclosed block"));
    }
    let Some((dim_line, dimension)) = dimension else {
        return Err(err(0, "missing `dimension`"));
    };
    if dimension < 2 {
        return Err(err(dim_line, "`dimension` must be at least 2"));
    }
    let Some(degree) = degree else {
        return Err(err(0, "missing `degree`"));
    };
    if !variables.is_empty() && variables.len() != dimension {
        return Err(err(
            variables_line,
            format!(
                "expected {dimension} variables, found {}",
                variables.len()
            ),
        ));
    }
    if !components.is_empty() {
        if variables.is_empty() {
            return Err(err(components_line, "components given without `variables`"));
        }
        if components.len() != dimension {
            return Err(err(
                components_line,
                format!("expected {dimension} components, found {}", components.len()),
            ));
        }
    }
    let curve_axis = match curve_axis {
        Some((line, name)) => {
            if !variables.iter().any(|v| v == &name) {
                return Err(err(line, format!("curve axis `{name}` is not a variable")));
            }
            Some(name)
        }
        None => None,
    };
    let mut curves = Vec::with_capacity(curve_blocks.len());
    for b in curve_blocks {
        let Some(d) = b.d else {
            return Err(err(b.line, "curve_data block is missing `d`"));
        };
        let Some(g) = b.g else {
            return Err(err(b.line, "curve_data block is missing `g`"));
        };
        let Some(ell) = b.ell else {
            return Err(err(b.line, "curve_data block is missing `ell`"));
        };
        if d < 1 {
            return Err(err(b.line, "`d` must be at least 1"));
        }
        if g < 0 {
            return Err(err(b.line, "`g` must be non-negative"));
        }
        if ell < 0 {
            return Err(err(b.line, "`ell` must be non-negative"));
        }
        curves.push(CurveNumbers {
            d,
            g,
            ell,
            branches: b.branches,
        });
    }
    if let Some(d) = &deformation {
        if d.equations.len() != dimension - 1 {
            return Err(err(
                deformation_line,
                format!(
                    "expected {} deformation equations, found {}",
                    dimension - 1,
                    d.equations.len()
                ),
            ));
        }
        if d.perturbations.len() != d.equations.len() {
            return Err(err(
                deformation_line,
                format!(
                    "expected {} perturbations, found {}",
                    d.equations.len(),
                    d.perturbations.len()
                ),
            ));
        }
        if d.field.len() != dimension {
            return Err(err(
                deformation_line,
                format!(
                    "expected {} field components in the deformation block, found {}",
                    dimension,
                    d.field.len()
                ),
            ));
        }
    }

    Ok(ProblemFile {
        dimension,
        degree,
        variables,
        components,
        curve_axis,
        curves,
        deformation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rat};

    const FULL: &str = "\
# A field on P^3 with the z3-axis singular.
dimension = 3
degree = 2
variables = z1, z2, z3
component = z1^2 + z1*z2 + z2^2
component = 2*z1*z2 + z2^2   # trailing comment
component = z1*(1 + z1 + 2*z3) + z2*(1 + z2 + 3*z3)

curve {
  axis = z3
}

curve_data {
  d = 1
  g = 0
  ell = 1
  branches = 2, 3
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
    fn parses_a_full_problem() {
        let p = parse_problem(FULL).unwrap();
        assert_eq!(p.dimension, 3);
        assert_eq!(p.degree, 2);
        assert_eq!(p.variables, vec!["z1", "z2", "z3"]);
        assert_eq!(p.components.len(), 3);
        assert_eq!(p.components[1], "2*z1*z2 + z2^2");
        assert_eq!(p.curve_axis.as_deref(), Some("z3"));
        assert_eq!(
            p.curves,
            vec![CurveNumbers {
                d: 1,
                g: 0,
                ell: 1,
                branches: vec![2, 3]
            }]
        );
        let d = p.deformation.unwrap();
        assert_eq!(d.equations, vec!["z1", "z1^2 + z2"]);
        assert_eq!(d.perturbations, vec!["1", "z1^2"]);
        assert_eq!(d.field.len(), 3);
        assert_eq!(d.parameters, vec![integer(0), rat(1, 2)]);
    }

    #[test]
    fn numbers_only_files_need_no_variables() {
        let p = parse_problem(
            "dimension = 4\ndegree = 3\ncurve_data {\n d = 2\n g = 1\n ell = 0\n}\n",
        )
        .unwrap();
        assert!(p.variables.is_empty());
        assert!(p.components.is_empty());
        assert_eq!(p.curves.len(), 1);
        assert!(p.curves[0].branches.is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_problem("dimension = 3\ndegree = 1\njunk\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.to_string().starts_with("line 3: "));

        let e = parse_problem("degree = 1\n").unwrap_err();
        assert_eq!(e.line, 0);
        assert_eq!(e.to_string(), "missing `dimension`");

        let e = parse_problem("dimension = 3\ndegree = 1\nvariables = x, y\n").unwrap_err();
        assert_eq!(e.line, 3);

        let e = parse_problem(
            "dimension = 3\ndegree = 1\nvariables = x, y, z\ncurve {\n axis = w\n}\n",
        )
        .unwrap_err();
        assert_eq!(e.line, 5);

        let e = parse_problem("dimension = 3\ndegree = 1\ncurve_data {\n d = 1\n g = 0\n}\n")
            .unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("missing `ell`"));

        let e = parse_problem("dimension = 3\ndegree = 1\ncurve_data {\n d = 1\n").unwrap_err();
        assert!(e.message.contains("unclosed block"));
    }

    #[test]
    fn rejects_out_of_range_values() {
        let bad_d = "dimension = 3\ndegree = 1\ncurve_data {\n d = 0\n g = 0\n ell = 0\n}\n";
        assert!(parse_problem(bad_d).unwrap_err().message.contains("`d`"));
        let bad_branch =
            "dimension = 3\ndegree = 1\ncurve_data {\n d = 1\n g = 0\n ell = 0\n branches = 0\n}\n";
        assert!(parse_problem(bad_branch)
            .unwrap_err()
            .message
            .contains("branch"));
    }

    #[test]
    fn deformation_counts_must_match_the_dimension() {
        let text = "dimension = 3\ndegree = 1\ndeformation {\n f = z1\n h = 0\n field = z1\n}\n";
        let e = parse_problem(text).unwrap_err();
        assert!(e.message.contains("expected 2 deformation equations"));
    }
}
