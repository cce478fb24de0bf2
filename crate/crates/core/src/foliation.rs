//! One-dimensional holomorphic foliations on projective space, presented by
//! polynomial vector fields in affine charts.
//!
//! A degree-`k` foliation on projective `n`-space restricts to the chart
//! `{x_0 ≠ 0}` as a polynomial vector field `(f_1, …, f_n)` whose components
//! have total degree at most `k + 1`, with the degree-`(k+1)` layer a common
//! multiple of the radial field: `top(f_i) = g · z_i` for a single
//! homogeneous `g` of degree `k`.  [`AffineFoliation::new`] validates that
//! shape; [`ProjectiveFoliation`] stores the chart-0 presentation and
//! produces the field in any other chart on demand, stripping the common
//! power of the new chart's extra coordinate so that each chart carries the
//! saturated local generator.
//!
//! [`isolated_milnor_total`] walks all `n + 1` charts, saturates the
//! singular scheme away from the given coordinate lines, and adds up chart
//! colengths without double-counting: in chart `m`, only points with
//! `x_0 = … = x_{m-1} = 0` are new.

use std::collections::BTreeSet;
use std::fmt;

use crate::groebner::{
    count_points_on_subspace, saturate, GroebnerError, Ideal,
};
use crate::poly::{AxisOrder, MultiPoly};
use crate::ring::{Monomial, PolyRing};

/// Errors from building foliations or counting their singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoliationError {
    /// The component list must have one entry per ring variable.
    WrongComponentCount { expected: usize, found: usize },
    /// All components vanish; the zero field defines no foliation.
    ZeroField,
    /// A component exceeds the degree bound `k + 1`.
    ComponentDegreeTooHigh {
        component: usize,
        degree: u32,
        max: u32,
    },
    /// The degree-`(k+1)` layer of the components is not a common multiple
    /// of the radial field.
    TopLayerNotRadial,
    /// A component belongs to a different ring.
    RingMismatch,
    /// The chart index exceeds the ambient dimension.
    ChartOutOfRange { chart: usize, n: usize },
    /// A coordinate-line description does not fit the ambient space.
    InvalidCoordinateLine { message: String },
    /// After removing the declared curves, the singular scheme in the named
    /// chart still has positive dimension.
    NonIsolatedSingularities { chart: usize, variable: String },
    /// An ideal-theoretic step failed.
    Groebner(GroebnerError),
}

impl fmt::Display for FoliationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoliationError::WrongComponentCount { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            FoliationError::ZeroField => write!(f, "all components are zero"),
            FoliationError::ComponentDegreeTooHigh {
                component,
                degree,
                max,
            } => write!(
                f,
                "component {component} has degree {degree}, above the bound {max}"
            ),
            FoliationError::TopLayerNotRadial => write!(
                f,
                "the top-degree layer of the components is not a common multiple of the radial field"
            ),
            FoliationError::RingMismatch => write!(f, "component ring mismatch"),
            FoliationError::ChartOutOfRange { chart, n } => {
                write!(f, "chart {chart} is out of range for projective {n}-space")
            }
            FoliationError::InvalidCoordinateLine { message } => {
                write!(f, "invalid coordinate line: {message}")
            }
            FoliationError::NonIsolatedSingularities { chart, variable } => write!(
                f,
                "singular locus in chart {chart} has positive dimension along `{variable}` after removing the declared curves"
            ),
            FoliationError::Groebner(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FoliationError {}

impl From<GroebnerError> for FoliationError {
    fn from(e: GroebnerError) -> FoliationError {
        FoliationError::Groebner(e)
    }
}

/// A polynomial vector field presenting a foliation in one affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFoliation {
    ring: PolyRing,
    components: Vec<MultiPoly>,
    degree: u32,
    chart: usize,
}

/// Splits the top layer off as `g · radial` if possible.
fn radial_cofactor(
    components: &[MultiPoly],
    ring: &PolyRing,
    top_degree: u32,
) -> Option<MultiPoly> {
    let tops: Vec<MultiPoly> = components
        .iter()
        .map(|f| f.homogeneous_part(top_degree))
        .collect();
    let first_nonzero = tops.iter().position(|t| !t.is_zero());
    let Some(i) = first_nonzero else {
        // Top layer identically zero: g = 0.
        return Some(MultiPoly::zero(ring));
    };
    let zi = MultiPoly::var(ring, i);
    let g = tops[i].div_exact(&zi)?;
    for (j, t) in tops.iter().enumerate() {
        if *t != &g * &MultiPoly::var(ring, j) {
            return None;
        }
    }
    Some(g)
}

impl AffineFoliation {
    /// Validates and wraps a chart-0 presentation: one component per
    /// variable, not all zero, degrees at most `k + 1`, and the top layer a
    /// common multiple of the radial field.
    pub fn new(
        ring: PolyRing,
        components: Vec<MultiPoly>,
        degree: u32,
    ) -> Result<AffineFoliation, FoliationError> {
        let n = ring.num_vars();
        if components.len() != n {
            return Err(FoliationError::WrongComponentCount {
                expected: n,
                found: components.len(),
            });
        }
        if components.iter().any(|f| f.ring() != &ring) {
            return Err(FoliationError::RingMismatch);
        }
        if components.iter().all(|f| f.is_zero()) {
            return Err(FoliationError::ZeroField);
        }
        let max = degree + 1;
        for (i, f) in components.iter().enumerate() {
            if let Some(d) = f.total_degree() {
                if d > max {
                    return Err(FoliationError::ComponentDegreeTooHigh {
                        component: i + 1,
                        degree: d,
                        max,
                    });
                }
            }
        }
        if radial_cofactor(&components, &ring, max).is_none() {
            return Err(FoliationError::TopLayerNotRadial);
        }
        Ok(AffineFoliation {
            ring,
            components,
            degree,
            chart: 0,
        })
    }

    /// Wraps an already-transformed field without the chart-0 shape checks.
    fn with_chart(
        ring: PolyRing,
        components: Vec<MultiPoly>,
        degree: u32,
        chart: usize,
    ) -> AffineFoliation {
        AffineFoliation {
            ring,
            components,
            degree,
            chart,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// The declared projective degree `k`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Which projective chart this field lives in.
    pub fn chart(&self) -> usize {
        self.chart
    }

    /// The ideal generated by the components; its zero scheme is the
    /// singular locus of the foliation in this chart.
    pub fn singular_ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.components.clone())
            .expect("components live in the field's ring")
    }
}

impl fmt::Display for AffineFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A degree-`k` foliation on projective `n`-space, stored through its
/// chart-0 presentation.
#[derive(Clone, Debug)]
pub struct ProjectiveFoliation {
    n: usize,
    degree: u32,
    chart0: AffineFoliation,
}

impl ProjectiveFoliation {
    pub fn from_chart0(
        ring: PolyRing,
        components: Vec<MultiPoly>,
        degree: u32,
    ) -> Result<ProjectiveFoliation, FoliationError> {
        let chart0 = AffineFoliation::new(ring, components, degree)?;
        Ok(ProjectiveFoliation {
            n: chart0.ring().num_vars(),
            degree,
            chart0,
        })
    }

    /// The ambient projective dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn chart0(&self) -> &AffineFoliation {
        &self.chart0
    }

    /// The field in chart `m` (the locus `x_m ≠ 0`), in a ring whose first
    /// variable is the direction of the old chart (`x_0`) and whose
    /// remaining variables keep their chart-0 names.  The common power of
    /// that first variable is divided out, so the result generates the
    /// foliation in the new chart.
    pub fn chart_field(&self, m: usize) -> Result<AffineFoliation, FoliationError> {
        if m > self.n {
            return Err(FoliationError::ChartOutOfRange { chart: m, n: self.n });
        }
        if m == 0 {
            return Ok(self.chart0.clone());
        }
        let n = self.n;
        let ring0 = self.chart0.ring();
        // New ring: [w0, z_1, ..., z_{m-1}, z_{m+1}, ..., z_n], where the
        // chart-0 ring position p holds z_{p+1}.
        let w0 = ring0.fresh_name("w0");
        let mut names: Vec<&str> = vec![&w0];
        for p in 0..n {
            if p != m - 1 {
                names.push(ring0.var_name(p));
            }
        }
        let ring = PolyRing::new(&names).expect("chart names are distinct");
        // Chart-0 ring position p maps to the new position of z_{p+1}, or
        // drops out entirely for p = m − 1 (that variable becomes 1).
        let new_pos = |p: usize| -> Option<usize> {
            match (p + 1).cmp(&m) {
                std::cmp::Ordering::Less => Some(p + 1),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(p),
            }
        };
        let top = self.degree + 1;
        // Homogenize a chart-0 component to degree k + 1 with the old chart
        // direction (now w0) and set the new chart's variable to 1.
        let transport = |f: &MultiPoly| -> MultiPoly {
            let terms = f.terms().map(|(mono, c)| {
                let mut exps = vec![0u32; n];
                exps[0] = top - mono.degree();
                for p in 0..n {
                    if let Some(q) = new_pos(p) {
                        exps[q] = mono.exponent(p);
                    }
                }
                (Monomial::from_exponents(exps), c.clone())
            });
            MultiPoly::from_terms(&ring, terms)
        };
        let f_m = transport(&self.chart0.components()[m - 1]);
        let mut components = vec![MultiPoly::zero(&ring); n];
        // d(w_0)/dt = −w_0 · F_m, and for every kept coordinate
        // d(w_q)/dt = F_q − w_q · F_m.
        components[0] = -&(&MultiPoly::var(&ring, 0) * &f_m);
        for p in 0..n {
            if let Some(q) = new_pos(p) {
                let fq = transport(&self.chart0.components()[p]);
                components[q] = &fq - &(&MultiPoly::var(&ring, q) * &f_m);
            }
        }
        // Strip the common power of w0 introduced by the transformation.
        let s = components
            .iter()
            .filter_map(|f| match f.order_in(0) {
                AxisOrder::Finite(s) => Some(s),
                AxisOrder::Infinite => None,
            })
            .min()
            .unwrap_or(0);
        if s > 0 {
            for f in &mut components {
                *f = f
                    .div_by_var_power(0, s)
                    .expect("every component has w0-order at least the minimum");
            }
        }
        Ok(AffineFoliation::with_chart(ring, components, self.degree, m))
    }
}

/// A coordinate line in projective `n`-space: the common zero locus of
/// `n − 1` of the homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateLine {
    vanishing: BTreeSet<usize>,
}

impl CoordinateLine {
    /// The line `{x_i = 0 : i in vanishing}` in projective `n`-space.
    pub fn new(n: usize, vanishing: &[usize]) -> Result<CoordinateLine, FoliationError> {
        let set: BTreeSet<usize> = vanishing.iter().copied().collect();
        if set.len() != vanishing.len() {
            return Err(FoliationError::InvalidCoordinateLine {
                message: "vanishing coordinates repeat".into(),
            });
        }
        if set.len() + 2 != n + 1 {
            return Err(FoliationError::InvalidCoordinateLine {
                message: format!(
                    "a line in projective {n}-space needs {} vanishing coordinates, got {}",
                    n - 1,
                    set.len()
                ),
            });
        }
        if let Some(&bad) = set.iter().find(|&&i| i > n) {
            return Err(FoliationError::InvalidCoordinateLine {
                message: format!("coordinate index {bad} is out of range for {n}-space"),
            });
        }
        Ok(CoordinateLine { vanishing: set })
    }

    /// The homogeneous coordinate indices that vanish on the line.
    pub fn vanishing(&self) -> impl Iterator<Item = usize> + '_ {
        self.vanishing.iter().copied()
    }

    /// Whether the line meets the chart `{x_m ≠ 0}`.
    pub fn meets_chart(&self, m: usize) -> bool {
        !self.vanishing.contains(&m)
    }

    /// Ring positions of the vanishing coordinates in the chart-`m` ring
    /// produced by [`ProjectiveFoliation::chart_field`].  Only valid when
    /// the line meets that chart.
    pub fn chart_positions(&self, m: usize) -> Vec<usize> {
        debug_assert!(self.meets_chart(m));
        self.vanishing
            .iter()
            .map(|&i| {
                if m == 0 {
                    i - 1
                } else if i < m {
                    i
                } else {
                    i - 1
                }
            })
            .collect()
    }
}

/// Per-chart and total Milnor numbers of the isolated singularities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedMilnorReport {
    /// New contribution of each chart `0..=n` (points not seen in earlier
    /// charts).
    pub per_chart: Vec<u64>,
    /// Sum over all charts.
    pub total: u64,
}

/// Total Milnor number of the isolated singularities of the foliation, with
/// the singularities along the given coordinate lines removed by
/// saturation.
///
/// Chart `m` contributes the colength of its saturated singular scheme
/// restricted to `{x_0 = … = x_{m-1} = 0}`, which counts exactly the points
/// invisible in all earlier charts.  Errors if some chart's saturated
/// singular scheme still has positive dimension.
pub fn isolated_milnor_total(
    foliation: &ProjectiveFoliation,
    lines: &[CoordinateLine],
) -> Result<IsolatedMilnorReport, FoliationError> {
    let n = foliation.n();
    let mut per_chart = Vec::with_capacity(n + 1);
    let mut total = 0u64;
    for m in 0..=n {
        let field = foliation.chart_field(m)?;
        let mut ideal = field.singular_ideal();
        for line in lines {
            if !line.meets_chart(m) {
                continue;
            }
            let coord = Ideal::coordinate_subspace(field.ring(), &line.chart_positions(m));
            ideal = saturate(&ideal, &coord)?;
        }
        let priors: Vec<usize> = (0..m).collect();
        let count = count_points_on_subspace(&ideal, &priors).map_err(|e| match e {
            GroebnerError::NotZeroDimensional { variable } => {
                FoliationError::NonIsolatedSingularities { chart: m, variable }
            }
            other => FoliationError::Groebner(other),
        })?;
        per_chart.push(count);
        total += count;
    }
    Ok(IsolatedMilnorReport { per_chart, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    fn ring3() -> PolyRing {
        PolyRing::new(&["z1", "z2", "z3"]).unwrap()
    }

    fn field(ring: &PolyRing, comps: &[&str], degree: u32) -> ProjectiveFoliation {
        let components = comps
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        ProjectiveFoliation::from_chart0(ring.clone(), components, degree).unwrap()
    }

    #[test]
    fn chart0_validation() {
        let r = ring3();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        // Wrong component count.
        assert_eq!(
            AffineFoliation::new(r.clone(), vec![p("z1")], 1).unwrap_err(),
            FoliationError::WrongComponentCount {
                expected: 3,
                found: 1
            }
        );
        // Zero field.
        assert_eq!(
            AffineFoliation::new(r.clone(), vec![p("0"), p("0"), p("0")], 1).unwrap_err(),
            FoliationError::ZeroField
        );
        // Degree bound.
        assert!(matches!(
            AffineFoliation::new(r.clone(), vec![p("z1^3"), p("0"), p("0")], 1).unwrap_err(),
            FoliationError::ComponentDegreeTooHigh {
                component: 1,
                degree: 3,
                max: 2
            }
        ));
        // Non-radial top layer.
        assert_eq!(
            AffineFoliation::new(r.clone(), vec![p("z2^2"), p("1"), p("1")], 1).unwrap_err(),
            FoliationError::TopLayerNotRadial
        );
        // Mixed zero/nonzero top layer.
        assert_eq!(
            AffineFoliation::new(r.clone(), vec![p("z1^2 + 1"), p("z2"), p("z3")], 1).unwrap_err(),
            FoliationError::TopLayerNotRadial
        );
        // A genuinely radial top layer passes.
        assert!(AffineFoliation::new(
            r.clone(),
            vec![p("z1^2 + 1"), p("z1*z2"), p("z1*z3")],
            1
        )
        .is_ok());
    }

    #[test]
    fn constant_field_chart_transition() {
        let r = ring3();
        let fol = field(&r, &["1", "0", "0"], 0);
        let f1 = fol.chart_field(1).unwrap();
        assert_eq!(
            f1.ring().var_names(),
            &["w0".to_string(), "z2".to_string(), "z3".to_string()]
        );
        let q = |s: &str| parse_polynomial(f1.ring(), s).unwrap();
        assert_eq!(f1.components(), &[q("-w0"), q("-z2"), q("-z3")]);
        assert_eq!(f1.chart(), 1);
    }

    #[test]
    fn radial_field_chart_transition_divides_common_power() {
        let r = ring3();
        let fol = field(&r, &["z1", "z2", "z3"], 1);
        let f1 = fol.chart_field(1).unwrap();
        let q = |s: &str| parse_polynomial(f1.ring(), s).unwrap();
        // Before normalization the transform is (−w0², 0, 0).
        assert_eq!(f1.components(), &[q("-1"), q("0"), q("0")]);
    }

    #[test]
    fn chart_zero_is_identity_and_range_is_checked() {
        let r = ring3();
        let fol = field(&r, &["z1", "z2", "z3"], 1);
        assert_eq!(fol.chart_field(0).unwrap().components(), fol.chart0().components());
        assert!(matches!(
            fol.chart_field(4),
            Err(FoliationError::ChartOutOfRange { chart: 4, n: 3 })
        ));
    }

    #[test]
    fn radial_field_has_a_single_isolated_singularity() {
        let r = ring3();
        let fol = field(&r, &["z1", "z2", "z3"], 1);
        let report = isolated_milnor_total(&fol, &[]).unwrap();
        assert_eq!(report.per_chart, vec![1, 0, 0, 0]);
        assert_eq!(report.total, 1);
    }

    #[test]
    fn diagonal_field_counts_four_points() {
        // A generic degree-1 foliation has 1 + 1 + 1 + 1 = 4 isolated
        // singularities: one affine zero and one per eigendirection at
        // infinity.
        let r = ring3();
        let fol = field(&r, &["2*z1 + 1", "3*z2 + 1", "5*z3 + 1"], 1);
        let report = isolated_milnor_total(&fol, &[]).unwrap();
        assert_eq!(report.per_chart, vec![1, 1, 1, 1]);
        assert_eq!(report.total, 4);
    }

    #[test]
    fn curve_in_singular_locus_is_removed_by_saturation() {
        // Components vanish on the z3-axis {z1 = z2 = 0}; counting without
        // the line fails, counting with it succeeds.
        let r = ring3();
        let fol = field(
            &r,
            &[
                "z1^2 + z1*z2 + z2^2",
                "2*z1*z2 + z2^2",
                "z1*(1 + z1 + 2*z3) + z2*(1 + z2 + 3*z3)",
            ],
            2,
        );
        assert!(matches!(
            isolated_milnor_total(&fol, &[]),
            Err(FoliationError::NonIsolatedSingularities { .. })
        ));
        let line = CoordinateLine::new(3, &[1, 2]).unwrap();
        let report = isolated_milnor_total(&fol, &[line]).unwrap();
        // The three points at infinity all have x_1 ≠ 0, so they are booked
        // in the first chart that sees them.
        assert_eq!(report.per_chart, vec![0, 3, 0, 0]);
        assert_eq!(report.total, 3);
    }

    #[test]
    fn coordinate_line_validation_and_chart_positions() {
        assert!(CoordinateLine::new(3, &[1, 1]).is_err());
        assert!(CoordinateLine::new(3, &[1]).is_err());
        assert!(CoordinateLine::new(3, &[1, 4]).is_err());
        let line = CoordinateLine::new(3, &[1, 2]).unwrap();
        assert!(line.meets_chart(0));
        assert!(!line.meets_chart(1));
        assert!(line.meets_chart(3));
        // Chart 0 ring is [z1, z2, z3]; chart 3 ring is [w0, z1, z2].
        assert_eq!(line.chart_positions(0), vec![0, 1]);
        assert_eq!(line.chart_positions(3), vec![1, 2]);
    }
}
