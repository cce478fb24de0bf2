//! Blowing up a coordinate-axis curve and transforming vector fields.
//!
//! The curve here is a coordinate axis in an affine chart: the locus where
//! all variables except one (the *axis*) vanish.  Blowing it up replaces the
//! ambient chart by `n − 1` blowup charts, one per normal direction `j`,
//! with substitution `z_j = u_j`, `z_i = u_i·u_j` for the other normals, and
//! `z_axis = u_axis`; the exceptional divisor is `{u_j = 0}`.
//!
//! For a vector field whose singular locus contains the curve, the module
//! computes:
//!
//! * the [`MultiplicityProfile`]: vanishing orders of the components along
//!   the curve, the induced [`CurveCase`] classification, and the *twist*
//!   `ℓ` — the multiplicity of the exceptional divisor in the pulled-back
//!   foliation;
//! * [residual polynomials](residual_polynomials), the leading fiber data
//!   that separates the classification cases;
//! * total and strict transforms of the field in each blowup chart;
//! * [`milnor_sum_on_exceptional`]: in the special non-dicritical case, the
//!   total Milnor number of the singularities of the restricted foliation
//!   on the exceptional divisor, assembled chart by chart without double
//!   counting and including the fiber over the curve's point at infinity.

use std::fmt;

use crate::foliation::{FoliationError, ProjectiveFoliation};
use crate::groebner::{count_points_on_subspace, GroebnerError, Ideal};
use crate::poly::{AxisOrder, MultiPoly};
use crate::ring::PolyRing;

/// Errors from blowup construction and counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowupError {
    /// Blowing up a curve needs an ambient dimension of at least 3.
    AmbientTooSmall { nvars: usize },
    /// The axis index exceeds the ring.
    AxisOutOfRange { axis: usize, nvars: usize },
    /// A component belongs to a different ring.
    RingMismatch,
    /// The component list must have one entry per ring variable.
    WrongComponentCount { expected: usize, found: usize },
    /// Every component is zero.
    ZeroField,
    /// The numbered component (1-based) does not vanish along the curve.
    CurveNotInSingularLocus { component: usize },
    /// The blowup chart must be one of the curve's normal directions.
    ChartNotNormal { chart: usize },
    /// Residuals divide by the leading component, which is zero here.
    UndefinedResiduals { position: usize },
    /// A transform component is not divisible by the requested power of the
    /// exceptional coordinate.
    InexactDivision { component: usize },
    /// The twist is not finite; the field degenerates along the curve.
    TwistInfinite,
    /// Counting on the exceptional divisor requires the special
    /// non-dicritical case.
    NotSpecial { case: CurveCase },
    /// The chart at the curve's far end fails to be special.
    FarChartNotSpecial { case: CurveCase },
    /// The two curve charts disagree about the twist.
    TwistMismatch { near: u32, far: u32 },
    /// The restricted foliation on the exceptional divisor has non-isolated
    /// singularities in the numbered blowup chart.
    NonIsolatedExceptional { chart: usize, variable: String },
    /// A chart transition failed.
    Foliation(FoliationError),
    /// An ideal-theoretic step failed.
    Groebner(GroebnerError),
}

impl fmt::Display for BlowupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupError::AmbientTooSmall { nvars } => {
                write!(f, "need at least 3 variables to blow up a curve, got {nvars}")
            }
            BlowupError::AxisOutOfRange { axis, nvars } => {
                write!(f, "axis {axis} is out of range for {nvars} variables")
            }
            BlowupError::RingMismatch => write!(f, "component ring mismatch"),
            BlowupError::WrongComponentCount { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            BlowupError::ZeroField => write!(f, "all components are zero"),
            BlowupError::CurveNotInSingularLocus { component } => {
                write!(f, "component {component} does not vanish along the curve")
            }
            BlowupError::ChartNotNormal { chart } => {
                write!(f, "blowup chart {chart} is not a normal direction of the curve")
            }
            BlowupError::UndefinedResiduals { position } => write!(
                f,
                "residuals are undefined: the leading component at position {position} is zero"
            ),
            BlowupError::InexactDivision { component } => write!(
                f,
                "component {component} is not divisible by the exceptional coordinate power"
            ),
            BlowupError::TwistInfinite => {
                write!(f, "the twist along the curve is not finite")
            }
            BlowupError::NotSpecial { case } => write!(
                f,
                "counting on the exceptional divisor needs the special non-dicritical case, got {case}"
            ),
            BlowupError::FarChartNotSpecial { case } => write!(
                f,
                "the far curve chart is not special non-dicritical: {case}"
            ),
            BlowupError::TwistMismatch { near, far } => write!(
                f,
                "curve charts disagree on the twist: {near} versus {far}"
            ),
            BlowupError::NonIsolatedExceptional { chart, variable } => write!(
                f,
                "restricted singularities on the exceptional divisor are not isolated in blowup chart {chart} (along `{variable}`)"
            ),
            BlowupError::Foliation(e) => write!(f, "{e}"),
            BlowupError::Groebner(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BlowupError {}

impl From<GroebnerError> for BlowupError {
    fn from(e: GroebnerError) -> BlowupError {
        BlowupError::Groebner(e)
    }
}

impl From<FoliationError> for BlowupError {
    fn from(e: FoliationError) -> BlowupError {
        BlowupError::Foliation(e)
    }
}

/// A coordinate-axis curve: `{z_p = 0 : p ≠ axis}` in the given ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisCurve {
    ring: PolyRing,
    axis: usize,
}

impl AxisCurve {
    pub fn new(ring: PolyRing, axis: usize) -> Result<AxisCurve, BlowupError> {
        let nvars = ring.num_vars();
        if nvars < 3 {
            return Err(BlowupError::AmbientTooSmall { nvars });
        }
        if axis >= nvars {
            return Err(BlowupError::AxisOutOfRange { axis, nvars });
        }
        Ok(AxisCurve { ring, axis })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Ring position of the coordinate running along the curve.
    pub fn axis(&self) -> usize {
        self.axis
    }

    /// Ring positions normal to the curve, ascending.
    pub fn normals(&self) -> Vec<usize> {
        (0..self.ring.num_vars()).filter(|&p| p != self.axis).collect()
    }

    /// The ideal of the curve.
    pub fn ideal(&self) -> Ideal {
        Ideal::coordinate_subspace(&self.ring, &self.normals())
    }

    fn check_components(&self, components: &[MultiPoly]) -> Result<(), BlowupError> {
        let n = self.ring.num_vars();
        if components.len() != n {
            return Err(BlowupError::WrongComponentCount {
                expected: n,
                found: components.len(),
            });
        }
        if components.iter().any(|f| f.ring() != &self.ring) {
            return Err(BlowupError::RingMismatch);
        }
        Ok(())
    }
}

/// One chart of the blowup along an [`AxisCurve`], indexed by a normal
/// direction `j`.  Chart variables are named `u1, …, un`, position-aligned
/// with the original ring; the exceptional divisor is `{u_j = 0}`.
#[derive(Clone, Debug)]
pub struct BlowupChart {
    curve: AxisCurve,
    chart: usize,
    ring: PolyRing,
    substitution: Vec<MultiPoly>,
}

impl BlowupChart {
    pub fn new(curve: &AxisCurve, chart: usize) -> Result<BlowupChart, BlowupError> {
        let n = curve.ring.num_vars();
        if chart >= n || chart == curve.axis {
            return Err(BlowupError::ChartNotNormal { chart });
        }
        let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        let ring = PolyRing::new(&names).expect("chart names are valid and distinct");
        let uj = MultiPoly::var(&ring, chart);
        let substitution: Vec<MultiPoly> = (0..n)
            .map(|p| {
                if p == chart || p == curve.axis {
                    MultiPoly::var(&ring, p)
                } else {
                    &MultiPoly::var(&ring, p) * &uj
                }
            })
            .collect();
        Ok(BlowupChart {
            curve: curve.clone(),
            chart,
            ring,
            substitution,
        })
    }

    /// The chart's polynomial ring in `u1, …, un`.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// The normal direction indexing this chart; also the ring position of
    /// the exceptional coordinate.
    pub fn chart(&self) -> usize {
        self.chart
    }

    /// The substitution images `σ(z_p)` in chart coordinates.
    pub fn substitution(&self) -> &[MultiPoly] {
        &self.substitution
    }

    /// `f ∘ σ`.
    pub fn pullback(&self, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.substitution)
    }

    /// The transformed vector field: `T_j = f_j∘σ`, `T_axis = f_axis∘σ`,
    /// and `T_i = (f_i∘σ − u_i·f_j∘σ)/u_j` for the other normals.  Requires
    /// every normal component to vanish along the curve (otherwise the
    /// division is not polynomial).
    pub fn total_transform(
        &self,
        components: &[MultiPoly],
    ) -> Result<Vec<MultiPoly>, BlowupError> {
        self.curve.check_components(components)?;
        for &p in &self.curve.normals() {
            if components[p].order_along(&self.curve.normals()) == AxisOrder::Finite(0) {
                return Err(BlowupError::CurveNotInSingularLocus { component: p + 1 });
            }
        }
        let j = self.chart;
        let fj = self.pullback(&components[j]);
        let n = self.curve.ring.num_vars();
        let mut out = Vec::with_capacity(n);
        for p in 0..n {
            if p == j || p == self.curve.axis {
                out.push(self.pullback(&components[p]));
            } else {
                let num = &self.pullback(&components[p]) - &(&MultiPoly::var(&self.ring, p) * &fj);
                let t = num
                    .div_by_var_power(j, 1)
                    .expect("normal components vanish on the curve, so u_j divides");
                out.push(t);
            }
        }
        Ok(out)
    }

    /// The strict transform: the total transform divided by `u_j` to the
    /// twist of the field along the curve.
    pub fn strict_transform(
        &self,
        components: &[MultiPoly],
    ) -> Result<StrictTransform, BlowupError> {
        let profile = MultiplicityProfile::new(&self.curve, components)?;
        self.strict_transform_with_power(components, profile.twist())
    }

    fn strict_transform_with_power(
        &self,
        components: &[MultiPoly],
        power: u32,
    ) -> Result<StrictTransform, BlowupError> {
        let total = self.total_transform(components)?;
        let mut out = Vec::with_capacity(total.len());
        for (p, t) in total.iter().enumerate() {
            match t.div_by_var_power(self.chart, power) {
                Some(q) => out.push(q),
                None => return Err(BlowupError::InexactDivision { component: p + 1 }),
            }
        }
        Ok(StrictTransform {
            chart: self.chart,
            components: out,
            divided_power: power,
        })
    }
}

/// A strict transform in one blowup chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTransform {
    /// The chart (and exceptional coordinate position).
    pub chart: usize,
    /// Transformed components, position-aligned with the original ring.
    pub components: Vec<MultiPoly>,
    /// The power of the exceptional coordinate divided out of the total
    /// transform.
    pub divided_power: u32,
}

/// Classification of the field's behavior along the blown-up curve.
///
/// Non-dicritical cases leave the exceptional divisor invariant; dicritical
/// ones do not.  The `NdISpecial` case is the one where counting on the
/// exceptional divisor is meaningful: the twist equals the vanishing order
/// of the field along the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveCase {
    /// Non-dicritical, with the leading fiber data nowhere identically
    /// degenerate.
    NdISpecial,
    /// Non-dicritical, dominated by the axis component.
    NdII,
    /// Non-dicritical, with degenerate leading fiber data.
    NdIII,
    /// Dicritical, axis order equal to the normal orders.
    DI,
    /// Dicritical, axis order exceeding the normal orders.
    DII,
}

impl fmt::Display for CurveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveCase::NdISpecial => "ND-i special",
            CurveCase::NdII => "ND-ii",
            CurveCase::NdIII => "ND-iii",
            CurveCase::DI => "D-i",
            CurveCase::DII => "D-ii",
        };
        write!(f, "{s}")
    }
}

/// Vanishing orders of a field along an axis curve, with the induced case
/// classification and twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    orders: Vec<AxisOrder>,
    axis: usize,
    case: CurveCase,
    twist: u32,
    curve_multiplicity: u32,
}

fn decrement(order: AxisOrder) -> AxisOrder {
    match order {
        AxisOrder::Finite(m) => AxisOrder::Finite(m.saturating_sub(1)),
        AxisOrder::Infinite => AxisOrder::Infinite,
    }
}

impl MultiplicityProfile {
    /// Computes orders, case, and twist for a field whose singular locus
    /// contains the curve.  Every component must vanish along the curve.
    pub fn new(
        curve: &AxisCurve,
        components: &[MultiPoly],
    ) -> Result<MultiplicityProfile, BlowupError> {
        curve.check_components(components)?;
        let normals = curve.normals();
        let orders: Vec<AxisOrder> = components
            .iter()
            .map(|f| f.order_along(&normals))
            .collect();
        for (p, o) in orders.iter().enumerate() {
            if *o == AxisOrder::Finite(0) {
                return Err(BlowupError::CurveNotInSingularLocus { component: p + 1 });
            }
        }
        if orders.iter().all(|o| *o == AxisOrder::Infinite) {
            return Err(BlowupError::ZeroField);
        }
        let curve_multiplicity = orders
            .iter()
            .filter_map(|o| match o {
                AxisOrder::Finite(m) => Some(*m),
                AxisOrder::Infinite => None,
            })
            .min()
            .expect("some order is finite");

        let ax = orders[curve.axis];
        let mut sorted: Vec<AxisOrder> = normals.iter().map(|&p| orders[p]).collect();
        sorted.sort();
        sorted.reverse();
        let m1 = sorted[0];
        let m_last = *sorted.last().expect("at least two normals");

        // All residuals vanish / none vanish, evaluated lazily: residuals
        // only discriminate when all normal orders agree.
        let residual_flags = |curve: &AxisCurve| -> Result<(bool, bool), BlowupError> {
            let set = residual_polynomials(curve, components)?;
            let all_zero = set.residuals.iter().all(|(_, r)| r.is_zero());
            let none_zero = set.residuals.iter().all(|(_, r)| !r.is_zero());
            Ok((all_zero, none_zero))
        };

        let chain = matches!(ax, AxisOrder::Finite(a) if sorted[1..]
            .iter()
            .all(|m| *m == AxisOrder::Finite(a + 1)));
        let case = if chain {
            if m1 == m_last {
                let (_, none_zero) = residual_flags(curve)?;
                if none_zero {
                    CurveCase::NdISpecial
                } else {
                    CurveCase::NdII
                }
            } else {
                // The top normal order strictly dominates; the residual
                // condition is vacuous.
                CurveCase::NdISpecial
            }
        } else if matches!(ax, AxisOrder::Finite(a) if AxisOrder::Finite(a + 1) <= m_last) {
            CurveCase::NdII
        } else if m1 == m_last {
            let (all_zero, _) = residual_flags(curve)?;
            if all_zero {
                if ax == m1 {
                    CurveCase::DI
                } else {
                    CurveCase::DII
                }
            } else {
                CurveCase::NdIII
            }
        } else {
            CurveCase::NdIII
        };

        let twist = match case {
            CurveCase::DI | CurveCase::DII => curve_multiplicity,
            _ => {
                let tail_min = sorted[1..]
                    .iter()
                    .map(|&m| decrement(m))
                    .min()
                    .expect("at least two normals");
                match [m1, ax, tail_min].into_iter().min().expect("nonempty") {
                    AxisOrder::Finite(l) => l,
                    AxisOrder::Infinite => return Err(BlowupError::TwistInfinite),
                }
            }
        };
        if case == CurveCase::NdISpecial {
            assert_eq!(
                twist, curve_multiplicity,
                "in the special case the twist equals the curve multiplicity"
            );
        }

        Ok(MultiplicityProfile {
            orders,
            axis: curve.axis,
            case,
            twist,
            curve_multiplicity,
        })
    }

    /// Vanishing order of each component along the curve, by ring position.
    pub fn orders(&self) -> &[AxisOrder] {
        &self.orders
    }

    pub fn case(&self) -> CurveCase {
        self.case
    }

    /// The multiplicity `ℓ` of the exceptional divisor in the pulled-back
    /// foliation.
    pub fn twist(&self) -> u32 {
        self.twist
    }

    /// The vanishing order of the field along the curve (minimum finite
    /// component order).
    pub fn curve_multiplicity(&self) -> u32 {
        self.curve_multiplicity
    }

    pub fn is_special(&self) -> bool {
        self.case == CurveCase::NdISpecial
    }
}

/// Residuals of a field along the curve: the leading fiber coefficients
/// that distinguish the classification cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualSet {
    /// The blowup chart (position of the leading normal component) used to
    /// compute the residuals.
    pub chart: usize,
    /// Pairs `(position, residual)` for each other normal component of
    /// maximal order, ascending by position.  The residuals live in the
    /// chart ring with the exceptional coordinate removed.
    pub residuals: Vec<(usize, MultiPoly)>,
}

/// Computes the residual polynomials of the field along the curve.
///
/// With `j` the first normal position of maximal vanishing order `m`, set
/// `g_i = (f_i ∘ σ_j) / u_j^m` restricted to `{u_j = 0}`; the residual of
/// another maximal-order normal component `i` is `g_i − u_i · g_j`.
pub fn residual_polynomials(
    curve: &AxisCurve,
    components: &[MultiPoly],
) -> Result<ResidualSet, BlowupError> {
    curve.check_components(components)?;
    let normals = curve.normals();
    let orders: Vec<AxisOrder> = components
        .iter()
        .map(|f| f.order_along(&normals))
        .collect();
    let m_max = normals
        .iter()
        .map(|&p| orders[p])
        .max()
        .expect("at least two normals");
    let j = *normals
        .iter()
        .find(|&&p| orders[p] == m_max)
        .expect("the maximum is attained");
    let AxisOrder::Finite(m_max) = m_max else {
        return Err(BlowupError::UndefinedResiduals { position: j });
    };
    let chart = BlowupChart::new(curve, j)?;
    let uring = chart.ring();
    // Target ring: chart coordinates with the exceptional one removed.
    let names: Vec<&str> = (0..uring.num_vars())
        .filter(|&p| p != j)
        .map(|p| uring.var_name(p))
        .collect();
    let ering = PolyRing::new(&names).expect("chart names stay distinct");
    let mut map: Vec<Option<usize>> = Vec::with_capacity(uring.num_vars());
    let mut next = 0usize;
    for p in 0..uring.num_vars() {
        if p == j {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    let leading = |p: usize| -> Result<MultiPoly, BlowupError> {
        chart
            .pullback(&components[p])
            .div_by_var_power(j, m_max)
            .ok_or(BlowupError::UndefinedResiduals { position: p })
            .map(|q| q.set_var_zero(j))
    };
    let gj = leading(j)?;
    let mut residuals = Vec::new();
    for &p in &normals {
        if p == j || orders[p] != AxisOrder::Finite(m_max) {
            continue;
        }
        let gp = leading(p)?;
        let r = &gp - &(&MultiPoly::var(uring, p) * &gj);
        residuals.push((
            p,
            r.project(&ering, &map)
                .expect("the exceptional coordinate was set to zero"),
        ));
    }
    Ok(ResidualSet { chart: j, residuals })
}

/// Per-chart Milnor counts of the restricted foliation on the exceptional
/// divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalMilnorReport {
    /// The twist `ℓ` along the curve.
    pub twist: u32,
    /// `(blowup chart, new contribution)` over the charts covering the
    /// fibers above the curve's affine points.
    pub near_charts: Vec<(usize, u64)>,
    /// `(blowup chart, new contribution)` over the charts at the curve's
    /// far end, restricted to the fiber above the point at infinity.
    pub far_charts: Vec<(usize, u64)>,
    /// Sum of all contributions.
    pub total: u64,
}

/// Builds the ideal of the restricted field on the exceptional divisor in
/// one blowup chart, plus the position map from the chart ring to the
/// divisor's own ring (chart coordinates minus the exceptional one).
fn exceptional_ideal(
    chart: &BlowupChart,
    strict: &StrictTransform,
) -> (PolyRing, Vec<Option<usize>>, Ideal) {
    let j = chart.chart();
    let uring = chart.ring();
    let names: Vec<&str> = (0..uring.num_vars())
        .filter(|&p| p != j)
        .map(|p| uring.var_name(p))
        .collect();
    let ering = PolyRing::new(&names).expect("chart names stay distinct");
    let mut map: Vec<Option<usize>> = Vec::with_capacity(uring.num_vars());
    let mut next = 0usize;
    for p in 0..uring.num_vars() {
        if p == j {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    let gens: Vec<MultiPoly> = (0..uring.num_vars())
        .filter(|&p| p != j)
        .map(|p| {
            strict.components[p]
                .set_var_zero(j)
                .project(&ering, &map)
                .expect("the exceptional coordinate was set to zero")
        })
        .collect();
    let ideal = Ideal::new(ering.clone(), gens).expect("generators live in the divisor ring");
    (ering, map, ideal)
}

/// Total Milnor number of the singularities of the restricted foliation on
/// the exceptional divisor, for a field in the special non-dicritical case
/// along the chart-0 axis curve.
///
/// The near charts sweep the fibers over the curve's affine points; the far
/// charts (computed from the projective field in the chart at the curve's
/// other end) contribute the fiber over the point at infinity.  Points are
/// counted once, in the first chart that sees them.
pub fn milnor_sum_on_exceptional(
    foliation: &ProjectiveFoliation,
    axis: usize,
) -> Result<ExceptionalMilnorReport, BlowupError> {
    let field0 = foliation.chart0();
    let curve = AxisCurve::new(field0.ring().clone(), axis)?;
    let profile = MultiplicityProfile::new(&curve, field0.components())?;
    if !profile.is_special() {
        return Err(BlowupError::NotSpecial {
            case: profile.case(),
        });
    }
    let twist = profile.twist();

    let count_fiber_points = |curve: &AxisCurve,
                              components: &[MultiPoly],
                              extra_prior: Option<usize>|
     -> Result<Vec<(usize, u64)>, BlowupError> {
        let normals = curve.normals();
        let mut out = Vec::with_capacity(normals.len());
        for (t, &j) in normals.iter().enumerate() {
            let chart = BlowupChart::new(curve, j)?;
            let strict = chart.strict_transform_with_power(components, twist)?;
            let (_, map, ideal) = exceptional_ideal(&chart, &strict);
            let mut priors: Vec<usize> = Vec::new();
            if let Some(p) = extra_prior {
                priors.push(map[p].expect("the prior coordinate stays in the divisor ring"));
            }
            for &earlier in &normals[..t] {
                priors.push(map[earlier].expect("earlier normals stay in the divisor ring"));
            }
            let count = count_points_on_subspace(&ideal, &priors).map_err(|e| match e {
                GroebnerError::NotZeroDimensional { variable } => {
                    BlowupError::NonIsolatedExceptional { chart: j, variable }
                }
                other => BlowupError::Groebner(other),
            })?;
            out.push((j, count));
        }
        Ok(out)
    };

    // Fibers over the affine part of the curve.
    let near_charts = count_fiber_points(&curve, field0.components(), None)?;

    // The fiber over the curve's point at infinity, seen from the chart at
    // the axis end.  There the curve is the axis of the first coordinate
    // (the old chart direction), and only the fiber over its origin is new.
    let far_field = foliation.chart_field(axis + 1)?;
    let far_curve = AxisCurve::new(far_field.ring().clone(), 0)?;
    let far_profile = MultiplicityProfile::new(&far_curve, far_field.components())?;
    if !far_profile.is_special() {
        return Err(BlowupError::FarChartNotSpecial {
            case: far_profile.case(),
        });
    }
    if far_profile.twist() != twist {
        return Err(BlowupError::TwistMismatch {
            near: twist,
            far: far_profile.twist(),
        });
    }
    let far_charts = count_fiber_points(&far_curve, far_field.components(), Some(0))?;

    let total = near_charts
        .iter()
        .chain(&far_charts)
        .map(|&(_, c)| c)
        .sum();
    Ok(ExceptionalMilnorReport {
        twist,
        near_charts,
        far_charts,
        total,
    })
}
