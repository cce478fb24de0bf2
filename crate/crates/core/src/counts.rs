//! Closed-form counts of isolated singularities, with multiplicity.
//!
//! A degree-`k` one-dimensional holomorphic foliation on projective
//! `n`-space with only isolated singularities has `Σ_{i=0}^{n} k^i` of them
//! counted with multiplicity.  When instead the singular locus contains a
//! smooth curve `C` (degree `d`, genus `g`) along which the foliation has
//! constant twist `ℓ`, a single blowup along `C` resolves the curve into an
//! exceptional divisor `E`, and the counts below give the multiplicity
//! totals of the induced foliations upstairs.  All formulas are polynomial
//! in the parameters and are evaluated exactly over arbitrary-precision
//! integers.
//!
//! The three blowup-side counts satisfy
//! `total_on_blowup = total_on_exceptional + total_off_curve` identically,
//! and [`curve_contribution`] packages the off-curve correction term
//! attached to one curve so that
//! `Σ k^i + Σ_C contribution(C)` counts the isolated singularities
//! downstairs (a negative contribution signals that some hypothesis fails;
//! callers surface that as a warning).

use num_bigint::BigInt;

/// Parameters of one curve in the singular locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    /// Degree of the curve in projective space.
    pub d: i64,
    /// Genus of the curve.
    pub g: i64,
    /// Twist of the foliation along the curve (the power of the exceptional
    /// ideal divided out of the pulled-back foliation).
    pub ell: i64,
    /// Multiplicities of the finitely many branch-like tangency points, if
    /// any; each contributes `b - 1` to the correction.
    pub branches: Vec<i64>,
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `Σ_{i=0}^{top} base^i`, the geometric sum (`top < 0` gives 0).
pub fn geometric_sum(base: i64, top: i64) -> BigInt {
    let mut acc = BigInt::from(0);
    let mut pow = BigInt::from(1);
    for _ in 0..=top.max(-1) {
        acc += &pow;
        pow *= big(base);
    }
    acc
}

/// Number of isolated singularities, with multiplicity, of a degree-`k`
/// foliation on projective `n`-space whose singularities are all isolated:
/// `Σ_{i=0}^{n} k^i`.
pub fn projective_milnor_total(n: u32, k: i64) -> BigInt {
    geometric_sum(k, n as i64)
}

/// Total multiplicity of the singularities of the pulled-back foliation that
/// lie on the exceptional divisor of the blowup along the curve:
///
/// ```text
/// (2 − 2g)·Σ_{i=0}^{n-3}(ℓ+1)^i
///   + (ℓ+1)^{n-2}·[(2 − 2g)(ℓ+1) − (n+1)dℓ + (k−1)d(n−1)]
/// ```
pub fn exceptional_milnor_total(n: u32, k: i64, ell: i64, d: i64, g: i64) -> BigInt {
    let n = n as i64;
    let chi = big(2 - 2 * g);
    let lp = ell + 1;
    let head = &chi * geometric_sum(lp, n - 3);
    let bracket = &chi * big(lp) - big((n + 1) * d * ell) + big((k - 1) * d * (n - 1));
    head + big(lp).pow((n - 2) as u32) * bracket
}

/// Total multiplicity of all singularities of the pulled-back foliation on
/// the blowup (on and off the exceptional divisor):
///
/// ```text
/// Σ_{i=0}^{n} k^i + (2 − 2g)·Σ_{i=0}^{n-3}(ℓ+1)^i
///   + (ℓ+1)^{n-2}·[(n+1)d(ℓ² − ℓ) − (2 − 2g)ℓ² − (k−1)d(nℓ − n + 2)]
/// ```
pub fn blowup_milnor_total(n: u32, k: i64, ell: i64, d: i64, g: i64) -> BigInt {
    let n_i = n as i64;
    let chi = big(2 - 2 * g);
    let lp = ell + 1;
    let head = projective_milnor_total(n, k) + &chi * geometric_sum(lp, n_i - 3);
    let bracket = big((n_i + 1) * d * (ell * ell - ell)) - &chi * big(ell * ell)
        - big((k - 1) * d * (n_i * ell - n_i + 2));
    head + big(lp).pow((n_i - 2) as u32) * bracket
}

/// Total multiplicity of the singularities of the pulled-back foliation
/// *off* the exceptional divisor — equivalently, downstairs and off the
/// curve.  Always equals [`blowup_milnor_total`] minus
/// [`exceptional_milnor_total`]:
///
/// ```text
/// Σ_{i=0}^{n} k^i
///   + (ℓ+1)^{n-2}·[(2g − 2)(ℓ² + ℓ + 1) + (n+1)dℓ² − (k−1)d(nℓ + 1)]
/// ```
pub fn off_curve_milnor_total(n: u32, k: i64, ell: i64, d: i64, g: i64) -> BigInt {
    let n_i = n as i64;
    let bracket = big((2 * g - 2) * (ell * ell + ell + 1)) + big((n_i + 1) * d * ell * ell)
        - big((k - 1) * d * (n_i * ell + 1));
    projective_milnor_total(n, k) + big(ell + 1).pow((n_i - 2) as u32) * bracket
}

/// The correction term one curve contributes to the count of isolated
/// singularities downstairs:
///
/// ```text
/// (ℓ+1)^{n-2}·[(2g − 2 − Σ(b_i − 1))(ℓ² + ℓ + 1) + (n+1)dℓ² − (k−1)d(nℓ + 1)]
/// ```
///
/// With no branch points this is `off_curve_milnor_total − Σ k^i`.
pub fn curve_contribution(n: u32, k: i64, curve: &CurveData) -> BigInt {
    let n_i = n as i64;
    let (d, g, ell) = (curve.d, curve.g, curve.ell);
    let branch_defect: i64 = curve.branches.iter().map(|b| b - 1).sum();
    let bracket = big((2 * g - 2 - branch_defect) * (ell * ell + ell + 1))
        + big((n_i + 1) * d * ell * ell)
        - big((k - 1) * d * (n_i * ell + 1));
    big(ell + 1).pow((n_i - 2) as u32) * bracket
}

/// Count of isolated singularities (with multiplicity) of a degree-`k`
/// foliation on projective `n`-space whose singular locus is the union of
/// the given curves and finitely many points: the all-isolated total plus
/// each curve's correction.  A negative result means the hypotheses cannot
/// all hold for an actual foliation; callers should flag it.
pub fn isolated_singularity_total(n: u32, k: i64, curves: &[CurveData]) -> BigInt {
    let mut acc = projective_milnor_total(n, k);
    for c in curves {
        acc += curve_contribution(n, k, c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_sums() {
        assert_eq!(geometric_sum(2, 3), big(15));
        assert_eq!(geometric_sum(1, 4), big(5));
        assert_eq!(geometric_sum(5, 0), big(1));
        assert_eq!(geometric_sum(5, -1), big(0));
    }

    #[test]
    fn projective_totals() {
        assert_eq!(projective_milnor_total(3, 2), big(15));
        assert_eq!(projective_milnor_total(3, 1), big(4));
        assert_eq!(projective_milnor_total(2, 4), big(21));
    }

    #[test]
    fn spot_values_for_a_line_in_three_space() {
        // Degree-2 foliation, twist 1, line (d = 1, g = 0) in 3-space.
        assert_eq!(exceptional_milnor_total(3, 2, 1, 1, 0), big(6));
        assert_eq!(off_curve_milnor_total(3, 2, 1, 1, 0), big(15) - big(12));
        assert_eq!(blowup_milnor_total(3, 2, 1, 1, 0), big(9));
        // Degree-3 foliation, twist 2.
        assert_eq!(exceptional_milnor_total(3, 3, 2, 1, 0), big(8));
        assert_eq!(off_curve_milnor_total(3, 3, 2, 1, 0), big(4));
        // Four-space, degree 2, twist 1.
        assert_eq!(exceptional_milnor_total(4, 2, 1, 1, 0), big(14));
        assert_eq!(off_curve_milnor_total(4, 2, 1, 1, 0), big(7));
        // Degree-1 foliation with twist 0 along a line: blowup total is the
        // plain projective total plus the d- and genus-correction at ℓ = 0.
        assert_eq!(blowup_milnor_total(3, 1, 0, 1, 0), big(6));
    }

    #[test]
    fn blowup_total_splits_as_exceptional_plus_off_curve() {
        for n in 3..=5u32 {
            for k in 1..=4 {
                for ell in 0..=3 {
                    for d in 1..=3 {
                        for g in 0..=2 {
                            assert_eq!(
                                blowup_milnor_total(n, k, ell, d, g),
                                exceptional_milnor_total(n, k, ell, d, g)
                                    + off_curve_milnor_total(n, k, ell, d, g),
                                "split fails at n={n} k={k} ell={ell} d={d} g={g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn line_with_maximal_twist_reduces_to_geometric_sums() {
        // For a line (d = 1, g = 0) with twist ℓ = k − 1 the exceptional
        // count collapses to 2·Σ_{i=0}^{n-2} k^i and the off-curve count to
        // Σ_{i=0}^{n-2} k^i.
        for n in 3..=6u32 {
            for k in 1..=5 {
                let s = geometric_sum(k, n as i64 - 2);
                assert_eq!(exceptional_milnor_total(n, k, k - 1, 1, 0), big(2) * &s);
                assert_eq!(off_curve_milnor_total(n, k, k - 1, 1, 0), s);
            }
        }
    }

    #[test]
    fn curve_contributions_and_downstairs_totals() {
        // No branch points: contribution = off-curve total − Σ k^i.
        let c = CurveData {
            d: 1,
            g: 0,
            ell: 1,
            branches: vec![],
        };
        assert_eq!(curve_contribution(3, 2, &c), big(3) - big(15));
        assert_eq!(isolated_singularity_total(3, 2, &[c]), big(3));

        // Two curves can drive the total negative, which flags inconsistent
        // hypotheses rather than an error in the arithmetic.
        let c1 = CurveData {
            d: 1,
            g: 0,
            ell: 1,
            branches: vec![],
        };
        let c2 = c1.clone();
        assert_eq!(isolated_singularity_total(3, 2, &[c1, c2]), big(-9));
    }

    #[test]
    fn branch_points_lower_the_contribution() {
        let plain = CurveData {
            d: 2,
            g: 0,
            ell: 1,
            branches: vec![],
        };
        let branched = CurveData {
            branches: vec![2, 3],
            ..plain.clone()
        };
        // Each branch point of multiplicity b lowers the bracket by
        // (b−1)(ℓ²+ℓ+1); here (1 + 2)·3 = 9 scaled by (ℓ+1)^{n-2} = 2.
        assert_eq!(
            curve_contribution(3, 2, &plain) - curve_contribution(3, 2, &branched),
            big(18)
        );
    }
}
