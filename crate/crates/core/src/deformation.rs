//! Vector fields singular along a deforming complete-intersection curve.
//!
//! Input: a model field `P` on the chart, and a family of curves cut out by
//! `n − 1` equations `f_i + t·h_i` (the last chart variable plays the role
//! of the parameter along the curve).  Writing `F_t` for the map whose
//! entries are the family equations followed by the axis variable, the
//! construction solves the linear system
//!
//! ```text
//! DF_t · Q = det(DF_t) · (P ∘ F_t)
//! ```
//!
//! by Cramer's rule in the first `n − 1` slots and takes `P_n ∘ F_t` as the
//! last component.  Because the last row of `DF_t` is `(0, …, 0, 1)`, the
//! vector obtained by rescaling that last component by `det(DF_t)` is the
//! exact Cramer solution, which is what [`SymbolicBuild::satisfies_cramer`]
//! checks.  When the model field vanishes on the axis, the first `n − 1`
//! built components lie in the ideal of the curve at each parameter value,
//! so the family deforms the singular curve without destroying it;
//! [`verify_family`] reports that membership sample by sample instead of
//! assuming it.

use std::fmt;

use crate::foliation::{AffineFoliation, FoliationError};
use crate::groebner::{groebner_basis, GroebnerError, Ideal, MonomialOrder};
use crate::matrix::jacobian;
use crate::poly::{AxisOrder, MultiPoly};
use crate::rational::Rational;
use crate::ring::PolyRing;

/// Errors from building or checking a deformation family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformationError {
    /// The family needs one equation per variable except the axis.
    WrongEquationCount { expected: usize, found: usize },
    /// The field needs one component per variable.
    WrongComponentCount { expected: usize, found: usize },
    /// The numbered equation (1-based) is zero.
    ZeroEquation { index: usize },
    /// A perturbation of higher degree than its equation.
    PerturbationDegreeTooHigh {
        index: usize,
        equation_degree: u32,
        perturbation_degree: u32,
    },
    /// Inputs belong to different rings.
    RingMismatch,
    /// The built field is not a valid foliation chart.
    Foliation(FoliationError),
    /// An ideal-theoretic step failed.
    Groebner(GroebnerError),
}

impl fmt::Display for DeformationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformationError::WrongEquationCount { expected, found } => {
                write!(f, "expected {expected} curve equations, found {found}")
            }
            DeformationError::WrongComponentCount { expected, found } => {
                write!(f, "expected {expected} field components, found {found}")
            }
            DeformationError::ZeroEquation { index } => {
                write!(f, "curve equation {index} is zero")
            }
            DeformationError::PerturbationDegreeTooHigh {
                index,
                equation_degree,
                perturbation_degree,
            } => write!(
                f,
                "perturbation {index} has degree {perturbation_degree}, above its equation's degree {equation_degree}"
            ),
            DeformationError::RingMismatch => write!(f, "ring mismatch"),
            DeformationError::Foliation(e) => write!(f, "{e}"),
            DeformationError::Groebner(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DeformationError {}

impl From<FoliationError> for DeformationError {
    fn from(e: FoliationError) -> DeformationError {
        DeformationError::Foliation(e)
    }
}

impl From<GroebnerError> for DeformationError {
    fn from(e: GroebnerError) -> DeformationError {
        DeformationError::Groebner(e)
    }
}

/// A family of complete-intersection curves `{f_i + t·h_i = 0}` in a chart,
/// parameterized along the last chart variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersectionData {
    ring: PolyRing,
    f: Vec<MultiPoly>,
    h: Vec<MultiPoly>,
}

impl CompleteIntersectionData {
    /// Validates that there is one equation and one perturbation per
    /// non-axis variable, that no equation is zero, and that perturbations
    /// do not raise degrees.
    pub fn new(
        ring: PolyRing,
        f: Vec<MultiPoly>,
        h: Vec<MultiPoly>,
    ) -> Result<CompleteIntersectionData, DeformationError> {
        let expected = ring.num_vars() - 1;
        if f.len() != expected {
            return Err(DeformationError::WrongEquationCount {
                expected,
                found: f.len(),
            });
        }
        if h.len() != expected {
            return Err(DeformationError::WrongEquationCount {
                expected,
                found: h.len(),
            });
        }
        if f.iter().chain(&h).any(|p| p.ring() != &ring) {
            return Err(DeformationError::RingMismatch);
        }
        for (i, (fi, hi)) in f.iter().zip(&h).enumerate() {
            let Some(fd) = fi.total_degree() else {
                return Err(DeformationError::ZeroEquation { index: i + 1 });
            };
            if let Some(hd) = hi.total_degree() {
                if hd > fd {
                    return Err(DeformationError::PerturbationDegreeTooHigh {
                        index: i + 1,
                        equation_degree: fd,
                        perturbation_degree: hd,
                    });
                }
            }
        }
        Ok(CompleteIntersectionData { ring, f, h })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn equations(&self) -> &[MultiPoly] {
        &self.f
    }

    pub fn perturbations(&self) -> &[MultiPoly] {
        &self.h
    }

    /// The curve's ideal at a fixed parameter value.
    pub fn curve_ideal_at(&self, t: &Rational) -> Ideal {
        let tt = MultiPoly::constant(&self.ring, t.clone());
        let gens: Vec<MultiPoly> = self
            .f
            .iter()
            .zip(&self.h)
            .map(|(fi, hi)| fi + &(&tt * hi))
            .collect();
        Ideal::new(self.ring.clone(), gens).expect("generators live in the family ring")
    }
}

/// The symbolic output of the construction, over the chart ring extended by
/// the family parameter (last position).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicBuild {
    ring: PolyRing,
    map: Vec<MultiPoly>,
    components: Vec<MultiPoly>,
    composed: Vec<MultiPoly>,
    determinant: MultiPoly,
}

impl SymbolicBuild {
    /// The chart ring extended by the parameter variable.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// The entries of `F_t`: the family equations, then the axis variable.
    pub fn map(&self) -> &[MultiPoly] {
        &self.map
    }

    /// The built field components.
    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// `P ∘ F_t`, component by component.
    pub fn composed(&self) -> &[MultiPoly] {
        &self.composed
    }

    /// `det(DF_t)`.
    pub fn determinant(&self) -> &MultiPoly {
        &self.determinant
    }

    /// Checks `DF_t · Q̂ = det(DF_t) · (P ∘ F_t)` for the built field with
    /// its last component rescaled by the determinant.
    pub fn satisfies_cramer(&self) -> bool {
        let n = self.map.len();
        let zvars: Vec<usize> = (0..n).collect();
        let df = jacobian(&self.map, &zvars);
        let mut rescaled = self.components.clone();
        rescaled[n - 1] = &rescaled[n - 1] * &self.determinant;
        (0..n).all(|row| {
            let mut lhs = MultiPoly::zero(&self.ring);
            for (col, q) in rescaled.iter().enumerate() {
                lhs = &lhs + &(df.at(row, col) * q);
            }
            lhs == &self.determinant * &self.composed[row]
        })
    }

    /// The built components at a fixed parameter value, back in the chart
    /// ring.
    pub fn specialize(&self, chart_ring: &PolyRing, t: &Rational) -> Vec<MultiPoly> {
        let n = chart_ring.num_vars();
        let mut images: Vec<MultiPoly> = (0..n).map(|p| MultiPoly::var(chart_ring, p)).collect();
        images.push(MultiPoly::constant(chart_ring, t.clone()));
        self.components
            .iter()
            .map(|q| q.substitute(&images))
            .collect()
    }
}

/// Runs the construction symbolically in the parameter.
pub fn build_symbolic(
    field: &[MultiPoly],
    data: &CompleteIntersectionData,
) -> Result<SymbolicBuild, DeformationError> {
    let ring = data.ring();
    let n = ring.num_vars();
    if field.len() != n {
        return Err(DeformationError::WrongComponentCount {
            expected: n,
            found: field.len(),
        });
    }
    if field.iter().any(|p| p.ring() != ring) {
        return Err(DeformationError::RingMismatch);
    }

    let mut names: Vec<String> = ring.var_names().to_vec();
    names.push(ring.fresh_name("t"));
    let ring_zt = PolyRing::new(&names).expect("extended names stay distinct");
    let lift_map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let lift = |p: &MultiPoly| {
        p.project(&ring_zt, &lift_map)
            .expect("every chart variable persists in the extension")
    };
    let t = MultiPoly::var(&ring_zt, n);

    let mut map: Vec<MultiPoly> = data
        .f
        .iter()
        .zip(&data.h)
        .map(|(fi, hi)| &lift(fi) + &(&t * &lift(hi)))
        .collect();
    map.push(MultiPoly::var(&ring_zt, n - 1));

    let composed: Vec<MultiPoly> = field.iter().map(|p| p.substitute(&map)).collect();
    let zvars: Vec<usize> = (0..n).collect();
    let df = jacobian(&map, &zvars);
    let determinant = df.determinant();

    let mut components: Vec<MultiPoly> = (0..n - 1)
        .map(|i| df.with_column_replaced(i, &composed).determinant())
        .collect();
    components.push(composed[n - 1].clone());

    Ok(SymbolicBuild {
        ring: ring_zt,
        map,
        components,
        composed,
        determinant,
    })
}

/// Builds the field at a fixed parameter value and wraps it as a foliation
/// chart, inferring the degree from the component degrees: the layer one
/// above the maximum must be radial, so either the maximum is `k + 1` or it
/// is `k` with a vanishing top layer.
pub fn build_field_at(
    field: &[MultiPoly],
    data: &CompleteIntersectionData,
    t: &Rational,
) -> Result<AffineFoliation, DeformationError> {
    let symbolic = build_symbolic(field, data)?;
    let components = symbolic.specialize(data.ring(), t);
    let d_max = components
        .iter()
        .filter_map(|c| c.total_degree())
        .max()
        .unwrap_or(0);
    let first = d_max.saturating_sub(1);
    match AffineFoliation::new(data.ring().clone(), components.clone(), first) {
        Ok(fol) => Ok(fol),
        Err(FoliationError::TopLayerNotRadial) if d_max > 0 => {
            Ok(AffineFoliation::new(data.ring().clone(), components, d_max)?)
        }
        Err(e) => Err(e.into()),
    }
}

/// One sampled parameter value of a family check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleCheck {
    pub t: Rational,
    /// The inferred foliation degree at this parameter value.
    pub degree: u32,
    /// Whether that degree matches the unperturbed member.
    pub degree_preserved: bool,
    /// For each built component, whether it lies in the curve's ideal at
    /// this parameter value.
    pub component_in_curve_ideal: Vec<bool>,
}

/// The outcome of checking a deformation family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// Whether the symbolic build solves the defining linear system.
    pub cramer_ok: bool,
    /// Whether the member at parameter zero agrees with the unperturbed
    /// family.
    pub base_matches: bool,
    /// Per-parameter-value checks.
    pub samples: Vec<SampleCheck>,
    /// Vanishing orders of the unperturbed field's components along the
    /// axis of the last chart variable.
    pub field_axis_orders: Vec<AxisOrder>,
}

/// Checks a family: the symbolic linear system, agreement of the base
/// member with the unperturbed build, and per-sample degree preservation
/// and curve-ideal membership.
pub fn verify_family(
    field: &[MultiPoly],
    data: &CompleteIntersectionData,
    samples: &[Rational],
) -> Result<FamilyReport, DeformationError> {
    let symbolic = build_symbolic(field, data)?;
    let cramer_ok = symbolic.satisfies_cramer();

    let zero = Rational::from_integer(0.into());
    let base = build_field_at(field, data, &zero)?;
    let unperturbed = CompleteIntersectionData::new(
        data.ring().clone(),
        data.f.clone(),
        vec![MultiPoly::zero(data.ring()); data.f.len()],
    )?;
    let anywhere = build_field_at(field, &unperturbed, &Rational::from_integer(1.into()))?;
    let base_matches =
        base.components() == anywhere.components() && base.degree() == anywhere.degree();

    let mut sample_checks = Vec::with_capacity(samples.len());
    for t in samples {
        let member = build_field_at(field, data, t)?;
        let gb = groebner_basis(&data.curve_ideal_at(t), MonomialOrder::DegRevLex);
        let component_in_curve_ideal = member
            .components()
            .iter()
            .map(|c| gb.normal_form(c).is_zero())
            .collect();
        sample_checks.push(SampleCheck {
            t: t.clone(),
            degree: member.degree(),
            degree_preserved: member.degree() == base.degree(),
            component_in_curve_ideal,
        });
    }

    let axis = data.ring().num_vars() - 1;
    let normals: Vec<usize> = (0..axis).collect();
    let field_axis_orders = base
        .components()
        .iter()
        .map(|c| c.order_along(&normals))
        .collect();

    Ok(FamilyReport {
        cramer_ok,
        base_matches,
        samples: sample_checks,
        field_axis_orders,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;
    use crate::rational::integer;

    fn ring3() -> PolyRing {
        PolyRing::new(&["z1", "z2", "z3"]).unwrap()
    }

    fn polys(r: &PolyRing, strs: &[&str]) -> Vec<MultiPoly> {
        strs.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()
    }

    fn triangular_data(r: &PolyRing) -> CompleteIntersectionData {
        CompleteIntersectionData::new(
            r.clone(),
            polys(r, &["z1", "z1^2 + z2"]),
            polys(r, &["1", "z1^2"]),
        )
        .unwrap()
    }

    #[test]
    fn data_validation() {
        let r = ring3();
        assert!(matches!(
            CompleteIntersectionData::new(r.clone(), polys(&r, &["z1"]), polys(&r, &["0"])),
            Err(DeformationError::WrongEquationCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            CompleteIntersectionData::new(
                r.clone(),
                polys(&r, &["z1", "0"]),
                polys(&r, &["0", "0"])
            ),
            Err(DeformationError::ZeroEquation { index: 2 })
        ));
        assert!(matches!(
            CompleteIntersectionData::new(
                r.clone(),
                polys(&r, &["z1", "z2"]),
                polys(&r, &["0", "z2^2"])
            ),
            Err(DeformationError::PerturbationDegreeTooHigh {
                index: 2,
                equation_degree: 1,
                perturbation_degree: 2
            })
        ));
    }

    #[test]
    fn triangular_family_builds_the_expected_field() {
        let r = ring3();
        let data = triangular_data(&r);
        let field = polys(&r, &["z1", "z2", "z3"]);

        let sym = build_symbolic(&field, &data).unwrap();
        // The family map is triangular in the chart variables, so the
        // Jacobian determinant is constant.
        assert_eq!(sym.determinant(), &MultiPoly::one(sym.ring()));
        assert!(sym.satisfies_cramer());

        let base = build_field_at(&field, &data, &integer(0)).unwrap();
        assert_eq!(base.components(), polys(&r, &["z1", "-z1^2 + z2", "z3"]));
        // The top layer of degree 2 is not radial, so inference settles on
        // degree 2 with an empty top layer.
        assert_eq!(base.degree(), 2);
    }

    #[test]
    fn identity_family_keeps_a_radial_field() {
        let r = ring3();
        let data = CompleteIntersectionData::new(
            r.clone(),
            polys(&r, &["z1", "z2"]),
            polys(&r, &["0", "0"]),
        )
        .unwrap();
        let field = polys(&r, &["z1", "z2", "z3"]);
        let fol = build_field_at(&field, &data, &integer(7)).unwrap();
        assert_eq!(fol.components(), field);
        assert_eq!(fol.degree(), 0);
    }

    #[test]
    fn family_report_flags_membership_per_component() {
        let r = ring3();
        let data = triangular_data(&r);

        // The model's axis component does not vanish on the axis, so the
        // last built component escapes the curve ideal; the Cramer slots
        // stay inside it.
        let field = polys(&r, &["z1", "z2", "z3"]);
        let report = verify_family(&field, &data, &[integer(0), integer(1)]).unwrap();
        assert!(report.cramer_ok);
        assert!(report.base_matches);
        assert_eq!(report.samples.len(), 2);
        for s in &report.samples {
            assert!(s.degree_preserved);
            assert_eq!(s.component_in_curve_ideal, vec![true, true, false]);
        }
        assert_eq!(
            report.field_axis_orders,
            vec![
                AxisOrder::Finite(1),
                AxisOrder::Finite(1),
                AxisOrder::Finite(0)
            ]
        );

        // A model vanishing on the whole axis keeps every component in the
        // curve ideal.
        let field = polys(&r, &["z1", "z2", "z1*z3"]);
        let report = verify_family(&field, &data, &[integer(2)]).unwrap();
        assert!(report.cramer_ok);
        assert_eq!(
            report.samples[0].component_in_curve_ideal,
            vec![true, true, true]
        );
    }
}
