//! Exact intersection arithmetic on the blowup of projective space along a
//! smooth curve, and on its exceptional divisor.
//!
//! Let `X` be the blowup of projective `n`-space along a smooth curve `C` of
//! degree `d` and genus `g`, with exceptional divisor `E` (a projective
//! bundle of fiber dimension `n − 2` over `C`).  Every class this module
//! manipulates is a combination of a few generators:
//!
//! * on `X`: powers of the hyperplane pullback `h`, powers of `E`, and at
//!   most one degree-one class pulled back from `C` (a *flag*);
//! * on `E`: powers of `ζ` (the first Chern class of the normal bundle of
//!   `E` in `X`) and at most one flag.
//!
//! Two flags multiply to zero because `C` is a curve.  Integration reduces
//! every top-degree monomial to a number through two rules: on `E`,
//! `∫ ζ^{n-1} = (−1)^n · deg c₁(N)` and `∫ ζ^{n-2}·flag = (−1)^n · deg flag`;
//! on `X`, a monomial containing `E^e` (`e ≥ 1`) pushes down to `E` as
//! `ζ^{e-1}` with every hyperplane factor restricting to a flag.
//!
//! On top of the arithmetic sit the Chern classes of `X` and of `E`, and the
//! total Milnor numbers of a degree-`k` foliation pulled back with twist `ℓ`
//! along `C`, computed as integrals of Chern classes against powers of the
//! twisted cotangent class.  These must agree with the closed forms in
//! [`crate::counts`]; the test suites of both modules pin that down.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Parameters of a blowup of projective `n`-space along a smooth curve, with
/// a foliation degree and twist attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupGeometry {
    n: u32,
    k: i64,
    ell: i64,
    d: i64,
    g: i64,
}

/// Errors constructing a [`BlowupGeometry`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChowError {
    /// The ambient dimension must be at least 3 for a curve blowup to have
    /// a projective-bundle exceptional divisor.
    DimensionTooSmall { n: u32 },
    /// The curve degree must be positive.
    CurveDegreeNotPositive { d: i64 },
    /// A parameter that must be nonnegative was negative.
    NegativeParameter { name: &'static str, value: i64 },
}

impl fmt::Display for ChowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChowError::DimensionTooSmall { n } => {
                write!(f, "ambient dimension must be at least 3, got {n}")
            }
            ChowError::CurveDegreeNotPositive { d } => {
                write!(f, "curve degree must be positive, got {d}")
            }
            ChowError::NegativeParameter { name, value } => {
                write!(f, "parameter `{name}` must be nonnegative, got {value}")
            }
        }
    }
}

impl std::error::Error for ChowError {}

impl BlowupGeometry {
    pub fn new(n: u32, k: i64, ell: i64, d: i64, g: i64) -> Result<BlowupGeometry, ChowError> {
        if n < 3 {
            return Err(ChowError::DimensionTooSmall { n });
        }
        if d < 1 {
            return Err(ChowError::CurveDegreeNotPositive { d });
        }
        for (name, value) in [("k", k), ("ell", ell), ("g", g)] {
            if value < 0 {
                return Err(ChowError::NegativeParameter { name, value });
            }
        }
        Ok(BlowupGeometry { n, k, ell, d, g })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree of the first Chern class of the normal bundle of the curve:
    /// `(n+1)d − 2 + 2g`.
    pub fn normal_degree(&self) -> i64 {
        (self.n as i64 + 1) * self.d - 2 + 2 * self.g
    }
}

/// A degree-one class pulled back from the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurveClass {
    /// First Chern class of the normal bundle of the curve in projective
    /// space; degree `(n+1)d − 2 + 2g`.
    Normal,
    /// First Chern class of the tangent bundle of the curve; degree `2 − 2g`.
    Curve,
    /// Hyperplane class restricted to the curve; degree `d`.
    Hyperplane,
}

impl CurveClass {
    pub fn degree(self, geom: &BlowupGeometry) -> i64 {
        match self {
            CurveClass::Normal => geom.normal_degree(),
            CurveClass::Curve => 2 - 2 * geom.g,
            CurveClass::Hyperplane => geom.d,
        }
    }

    fn label(self) -> &'static str {
        match self {
            CurveClass::Normal => "[normal]",
            CurveClass::Curve => "[curve]",
            CurveClass::Hyperplane => "[hyperplane]",
        }
    }
}

/// Flags multiply to zero (the curve is one-dimensional); otherwise the
/// single flag wins.
fn merge_flags(a: Option<CurveClass>, b: Option<CurveClass>) -> Result<Option<CurveClass>, ()> {
    match (a, b) {
        (Some(_), Some(_)) => Err(()),
        (Some(f), None) | (None, Some(f)) => Ok(Some(f)),
        (None, None) => Ok(None),
    }
}

/// A monomial on the exceptional divisor: `ζ^zeta` times an optional flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EMono {
    pub zeta: u32,
    pub flag: Option<CurveClass>,
}

impl EMono {
    pub fn degree(&self) -> u32 {
        self.zeta + self.flag.is_some() as u32
    }
}

/// A monomial on the blowup: `h^h · E^e` times an optional flag.  A flag is
/// always pulled into the monomial through the exceptional divisor, so
/// `flag.is_some()` implies `e ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PtMono {
    pub h: u32,
    pub e: u32,
    pub flag: Option<CurveClass>,
}

impl PtMono {
    pub fn degree(&self) -> u32 {
        self.h + self.e + self.flag.is_some() as u32
    }
}

macro_rules! formal_class {
    ($Class:ident, $Mono:ident, $mul_monos:expr) => {
        /// An integer combination of monomials.
        #[derive(Clone, Debug, PartialEq, Eq, Default)]
        pub struct $Class {
            terms: BTreeMap<$Mono, BigInt>,
        }

        impl $Class {
            pub fn zero() -> $Class {
                $Class {
                    terms: BTreeMap::new(),
                }
            }

            pub fn term(mono: $Mono, coeff: impl Into<BigInt>) -> $Class {
                let mut c = $Class::zero();
                c.add_term(mono, coeff.into());
                c
            }

            fn add_term(&mut self, mono: $Mono, coeff: BigInt) {
                if coeff.is_zero() {
                    return;
                }
                let slot = self.terms.entry(mono).or_insert_with(BigInt::zero);
                *slot += coeff;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn terms(&self) -> impl Iterator<Item = (&$Mono, &BigInt)> {
                self.terms.iter()
            }

            pub fn add(&self, other: &$Class) -> $Class {
                let mut out = self.clone();
                for (m, c) in &other.terms {
                    out.add_term(*m, c.clone());
                }
                out
            }

            pub fn scaled(&self, by: impl Into<BigInt>) -> $Class {
                let by = by.into();
                let mut out = $Class::zero();
                for (m, c) in &self.terms {
                    out.add_term(*m, c * &by);
                }
                out
            }

            pub fn mul(&self, other: &$Class) -> $Class {
                let mut out = $Class::zero();
                for (ma, ca) in &self.terms {
                    for (mb, cb) in &other.terms {
                        // A flag collision kills the product term.
                        if let Some(m) = $mul_monos(ma, mb) {
                            out.add_term(m, ca * cb);
                        }
                    }
                }
                out
            }

            pub fn pow(&self, exp: u32) -> $Class {
                let mut out = $Class::term($Mono::default(), 1);
                for _ in 0..exp {
                    out = out.mul(self);
                }
                out
            }
        }
    };
}

impl Default for EMono {
    fn default() -> EMono {
        EMono {
            zeta: 0,
            flag: None,
        }
    }
}

impl Default for PtMono {
    fn default() -> PtMono {
        PtMono {
            h: 0,
            e: 0,
            flag: None,
        }
    }
}

formal_class!(EClass, EMono, |a: &EMono, b: &EMono| {
    merge_flags(a.flag, b.flag).ok().map(|flag| EMono {
        zeta: a.zeta + b.zeta,
        flag,
    })
});

formal_class!(PtClass, PtMono, |a: &PtMono, b: &PtMono| {
    merge_flags(a.flag, b.flag).ok().map(|flag| PtMono {
        h: a.h + b.h,
        e: a.e + b.e,
        flag,
    })
});

impl EClass {
    /// The class `ζ`.
    pub fn zeta() -> EClass {
        EClass::term(
            EMono {
                zeta: 1,
                flag: None,
            },
            1,
        )
    }

    /// A flag (degree-one class pulled back from the curve).
    pub fn flag(f: CurveClass) -> EClass {
        EClass::term(
            EMono {
                zeta: 0,
                flag: Some(f),
            },
            1,
        )
    }

    pub fn one() -> EClass {
        EClass::term(EMono::default(), 1)
    }
}

impl PtClass {
    /// The hyperplane pullback `h`.
    pub fn hyperplane() -> PtClass {
        PtClass::term(
            PtMono {
                h: 1,
                e: 0,
                flag: None,
            },
            1,
        )
    }

    /// The exceptional divisor class `E`.
    pub fn exceptional() -> PtClass {
        PtClass::term(
            PtMono {
                h: 0,
                e: 1,
                flag: None,
            },
            1,
        )
    }

    pub fn one() -> PtClass {
        PtClass::term(PtMono::default(), 1)
    }
}

fn render_terms<M: Copy>(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<M, BigInt>,
    show: impl Fn(M) -> String,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (m, c) in terms.iter().rev() {
        let mono = show(*m);
        let (sign, abs) = if c.sign() == num_bigint::Sign::Minus {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {sign} ")?;
        }
        if mono == "1" {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    Ok(())
}

fn power(base: &str, exp: u32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(base.to_string()),
        e => Some(format!("{base}^{e}")),
    }
}

impl fmt::Display for EMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        parts.extend(power("zeta", self.zeta));
        parts.extend(self.flag.map(|fl| fl.label().to_string()));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for PtMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        parts.extend(power("h", self.h));
        parts.extend(power("E", self.e));
        parts.extend(self.flag.map(|fl| fl.label().to_string()));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for EClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, &self.terms, |m: EMono| m.to_string())
    }
}

impl fmt::Display for PtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, &self.terms, |m: PtMono| m.to_string())
    }
}

fn sign(parity: i64) -> BigInt {
    if parity.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Binomial coefficient for nonnegative `a`, zero when `b` is out of range.
pub fn binom(a: i64, b: i64) -> BigInt {
    debug_assert!(a >= 0, "binomials here always have a nonnegative top");
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

fn integrate_emono(mono: &EMono, coeff: &BigInt, geom: &BlowupGeometry) -> BigInt {
    let n = geom.n as i64;
    let top = geom.n - 1;
    assert_eq!(
        mono.degree(),
        top,
        "exceptional integration needs degree {top}, got a term of degree {}",
        mono.degree()
    );
    match mono.flag {
        None => coeff * sign(n) * BigInt::from(geom.normal_degree()),
        Some(f) => coeff * sign(n) * BigInt::from(f.degree(geom)),
    }
}

/// Integrates a top-degree (`n − 1`) class over the exceptional divisor.
///
/// # Panics
///
/// Panics when a term does not have top degree; the class constructors in
/// this module only produce homogeneous pieces, so a mixed input is a bug.
pub fn integrate_exceptional(class: &EClass, geom: &BlowupGeometry) -> BigInt {
    class
        .terms()
        .map(|(m, c)| integrate_emono(m, c, geom))
        .sum()
}

/// Integrates a top-degree (`n`) class over the blowup.  Monomials with a
/// factor of `E` push down to the exceptional divisor (`E^e ↦ ζ^{e-1}`,
/// hyperplane factors restrict to flags); pure hyperplane powers integrate
/// to 1.
///
/// # Panics
///
/// Panics when a term does not have top degree.
pub fn integrate_blowup(class: &PtClass, geom: &BlowupGeometry) -> BigInt {
    let n = geom.n;
    let mut total = BigInt::zero();
    for (mono, coeff) in class.terms() {
        assert_eq!(
            mono.degree(),
            n,
            "blowup integration needs degree {n}, got a term of degree {}",
            mono.degree()
        );
        if mono.e == 0 {
            debug_assert!(mono.flag.is_none(), "a flag always rides an E factor");
            // h^n integrates to 1.
            total += coeff;
            continue;
        }
        // Push down: E^e ↦ ζ^{e-1}; each hyperplane factor becomes a flag,
        // and two flags annihilate the term.
        let flags = mono.h + mono.flag.is_some() as u32;
        if flags >= 2 {
            continue;
        }
        let flag = if mono.h == 1 {
            Some(CurveClass::Hyperplane)
        } else {
            mono.flag
        };
        let emono = EMono {
            zeta: mono.e - 1,
            flag,
        };
        total += integrate_emono(&emono, coeff, geom);
    }
    total
}

/// Chern classes `c_0, …, c_n` of the tangent bundle of the blowup.
pub fn chern_classes_blowup(geom: &BlowupGeometry) -> Vec<PtClass> {
    let n = geom.n as i64;
    // c_j of the curve's normal bundle: 1 for j = 0, a flag for j = 1,
    // zero beyond (the base is a curve).
    let normal_flag = |j: i64| -> Option<Option<CurveClass>> {
        match j {
            0 => Some(None),
            1 => Some(Some(CurveClass::Normal)),
            _ => None,
        }
    };
    let mut classes = Vec::with_capacity(geom.n as usize + 1);
    for i in 0..=n {
        let mut c = PtClass::term(
            PtMono {
                h: i as u32,
                e: 0,
                flag: None,
            },
            binom(n + 1, i),
        );
        for j in 0..i {
            let Some(flag) = normal_flag(j) else { continue };
            let coeff = (binom(n - 1 - j, i - 1 - j) - binom(n - 1 - j, i - j))
                * sign(i - 1 - j);
            c = c.add(&PtClass::term(
                PtMono {
                    h: 0,
                    e: (i - j) as u32,
                    flag,
                },
                coeff,
            ));
        }
        for j in 0..=(i - 2) {
            // The extra factor is the curve's tangent class; it only
            // survives against c_0 of the normal bundle (two flags vanish).
            let Some(flag) = normal_flag(j) else { continue };
            if merge_flags(flag, Some(CurveClass::Curve)).is_err() {
                continue;
            }
            let coeff = (binom(n - 1 - j, i - 2 - j) - binom(n - 1 - j, i - j - 1))
                * sign(i - 2 - j);
            c = c.add(&PtClass::term(
                PtMono {
                    h: 0,
                    e: (i - 1 - j) as u32,
                    flag: Some(CurveClass::Curve),
                },
                coeff,
            ));
        }
        classes.push(c);
    }
    classes
}

/// Chern classes `c_0, …, c_{n-1}` of the tangent bundle of the exceptional
/// divisor.
pub fn chern_classes_exceptional(geom: &BlowupGeometry) -> Vec<EClass> {
    let n = geom.n as i64;
    let mut classes = Vec::with_capacity(geom.n as usize);
    for i in 0..n {
        let mut c = EClass::term(
            EMono {
                zeta: i as u32,
                flag: None,
            },
            sign(i) * binom(n - 1, i),
        );
        // Restrictions of the ambient Chern classes: the hyperplane flag
        // squares to zero, so only the linear term survives.
        for j in 0..i {
            let m = i - j;
            if m != 1 {
                continue;
            }
            c = c.add(&EClass::term(
                EMono {
                    zeta: j as u32,
                    flag: Some(CurveClass::Hyperplane),
                },
                sign(j) * binom(n + 1, m),
            ));
        }
        // Normal-bundle corrections: only c_1 of the normal bundle exists.
        for j in 1..i {
            if j != 1 {
                continue;
            }
            c = c.add(&EClass::term(
                EMono {
                    zeta: (i - j) as u32,
                    flag: Some(CurveClass::Normal),
                },
                sign(i - j - 1) * (BigInt::one() - binom(n - j - 1, i - j)),
            ));
        }
        // Curve-tangent corrections: only the j = 0 term carries one flag.
        for j in 0..=(i - 2) {
            if j != 0 {
                continue;
            }
            c = c.add(&EClass::term(
                EMono {
                    zeta: (i - j - 1) as u32,
                    flag: Some(CurveClass::Curve),
                },
                sign(i - j) * (BigInt::one() - binom(n - j - 1, i - j - 1)),
            ));
        }
        classes.push(c);
    }
    classes
}

/// Total Milnor number of the singularities on the exceptional divisor of
/// the pulled-back foliation, as the integral over `E` of
/// `Σ c_i(E) · L^{n-1-i}` with `L = (k−1)·hyperplane-flag − ℓ·ζ`.
pub fn exceptional_milnor_total(geom: &BlowupGeometry) -> BigInt {
    let l = EClass::flag(CurveClass::Hyperplane)
        .scaled(geom.k - 1)
        .add(&EClass::zeta().scaled(-geom.ell));
    let chern = chern_classes_exceptional(geom);
    let mut total = BigInt::zero();
    for (i, c) in chern.iter().enumerate() {
        let piece = c.mul(&l.pow(geom.n - 1 - i as u32));
        total += integrate_exceptional(&piece, geom);
    }
    total
}

/// Total Milnor number of all singularities of the pulled-back foliation on
/// the blowup, as the integral of `Σ c_i(X) · M^{n-i}` with
/// `M = (k−1)·h − ℓ·E`.
pub fn blowup_milnor_total(geom: &BlowupGeometry) -> BigInt {
    let m = PtClass::hyperplane()
        .scaled(geom.k - 1)
        .add(&PtClass::exceptional().scaled(-geom.ell));
    let chern = chern_classes_blowup(geom);
    let mut total = BigInt::zero();
    for (i, c) in chern.iter().enumerate() {
        let piece = c.mul(&m.pow(geom.n - i as u32));
        total += integrate_blowup(&piece, geom);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts;

    fn geom(n: u32, k: i64, ell: i64, d: i64, g: i64) -> BlowupGeometry {
        BlowupGeometry::new(n, k, ell, d, g).unwrap()
    }

    #[test]
    fn geometry_validation() {
        assert!(BlowupGeometry::new(2, 1, 0, 1, 0).is_err());
        assert!(BlowupGeometry::new(3, 1, 0, 0, 0).is_err());
        assert!(BlowupGeometry::new(3, 1, -1, 1, 0).is_err());
        assert!(BlowupGeometry::new(3, 1, 0, 1, 0).is_ok());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(4, 0), BigInt::from(1));
        assert_eq!(binom(4, 5), BigInt::from(0));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(7, 3), BigInt::from(35));
    }

    #[test]
    fn basic_intersection_numbers() {
        let g3 = geom(3, 2, 1, 1, 0);
        let h = PtClass::hyperplane();
        let e = PtClass::exceptional();
        // h^3 = 1: a point off the center.
        assert_eq!(integrate_blowup(&h.pow(3), &g3), BigInt::from(1));
        // h^2 E = 0: a general line misses the exceptional divisor.
        assert_eq!(integrate_blowup(&h.pow(2).mul(&e), &g3), BigInt::from(0));
        // h E^2 = −d.
        assert_eq!(integrate_blowup(&h.mul(&e.pow(2)), &g3), BigInt::from(-1));
        let g3d = geom(3, 2, 1, 4, 1);
        assert_eq!(integrate_blowup(&h.mul(&e.pow(2)), &g3d), BigInt::from(-4));
        // E^3 = −deg c1(N) = −(4d − 2 + 2g).
        assert_eq!(integrate_blowup(&e.pow(3), &g3), BigInt::from(-2));
        assert_eq!(integrate_blowup(&e.pow(3), &g3d), BigInt::from(-16));
    }

    #[test]
    fn flags_square_to_zero() {
        let a = EClass::flag(CurveClass::Hyperplane);
        let b = EClass::flag(CurveClass::Normal);
        assert!(a.mul(&b).is_zero());
        assert!(a.mul(&a).is_zero());
        assert!(!a.mul(&EClass::zeta()).is_zero());
    }

    #[test]
    fn euler_characteristic_of_the_blowup() {
        // ∫ c_n = χ(X) = (n + 1) + (n − 2)(2 − 2g), independent of d.
        for n in 3..=5u32 {
            for d in 1..=3 {
                for g in 0..=2i64 {
                    let gm = geom(n, 1, 0, d, g);
                    let cn = chern_classes_blowup(&gm).pop().unwrap();
                    let expect = BigInt::from((n as i64 + 1) + (n as i64 - 2) * (2 - 2 * g));
                    assert_eq!(integrate_blowup(&cn, &gm), expect, "n={n} d={d} g={g}");
                }
            }
        }
    }

    #[test]
    fn c1_c2_is_24_on_threefold_blowups() {
        // ∫ c1 c2 = 24 χ(O) and blowing up a curve keeps χ(O) = 1.
        for d in 1..=4 {
            for g in 0..=3 {
                let gm = geom(3, 1, 0, d, g);
                let c = chern_classes_blowup(&gm);
                let prod = c[1].mul(&c[2]);
                assert_eq!(integrate_blowup(&prod, &gm), BigInt::from(24), "d={d} g={g}");
            }
        }
    }

    #[test]
    fn anticanonical_cube_of_a_line_blowup() {
        // X = blowup of 3-space along a line is Fano with (−K)^3 = 54;
        // in general (−K)^3 = 62 − 8d + 2g.
        for (d, g, expect) in [(1, 0, 54), (2, 0, 46), (3, 1, 40)] {
            let gm = geom(3, 1, 0, d, g);
            let c1 = &chern_classes_blowup(&gm)[1];
            assert_eq!(integrate_blowup(&c1.pow(3), &gm), BigInt::from(expect));
        }
    }

    #[test]
    fn exceptional_surface_invariants() {
        // For n = 3 the exceptional divisor is a ruled surface over the
        // curve: χ_top = 4 − 4g and K^2 = 8 − 8g, independent of d.
        for d in 1..=3 {
            for g in 0..=2i64 {
                let gm = geom(3, 2, 1, d, g);
                let c = chern_classes_exceptional(&gm);
                assert_eq!(
                    integrate_exceptional(&c[2], &gm),
                    BigInt::from(4 - 4 * g),
                    "chi_top at d={d} g={g}"
                );
                assert_eq!(
                    integrate_exceptional(&c[1].pow(2), &gm),
                    BigInt::from(8 - 8 * g),
                    "K^2 at d={d} g={g}"
                );
            }
        }
    }

    #[test]
    fn first_chern_class_shape() {
        let gm = geom(4, 2, 1, 1, 0);
        let c1 = &chern_classes_blowup(&gm)[1];
        let expect = PtClass::hyperplane()
            .scaled(5)
            .add(&PtClass::exceptional().scaled(-2));
        assert_eq!(c1, &expect);
        let c1e = &chern_classes_exceptional(&gm)[1];
        let expect = EClass::flag(CurveClass::Hyperplane)
            .scaled(5)
            .add(&EClass::zeta().scaled(-3));
        assert_eq!(c1e, &expect);
    }

    #[test]
    fn milnor_totals_match_the_closed_forms() {
        // Spot values first.
        assert_eq!(
            exceptional_milnor_total(&geom(3, 2, 1, 1, 0)),
            BigInt::from(6)
        );
        assert_eq!(blowup_milnor_total(&geom(3, 2, 1, 1, 0)), BigInt::from(9));
        // The intersection-theoretic totals agree with the closed forms on
        // a parameter grid.
        for n in 3..=4u32 {
            for k in 1..=3 {
                for ell in 0..=2 {
                    for d in 1..=2 {
                        for g in 0..=1 {
                            let gm = geom(n, k, ell, d, g);
                            assert_eq!(
                                exceptional_milnor_total(&gm),
                                counts::exceptional_milnor_total(n, k, ell, d, g),
                                "exceptional n={n} k={k} ell={ell} d={d} g={g}"
                            );
                            assert_eq!(
                                blowup_milnor_total(&gm),
                                counts::blowup_milnor_total(n, k, ell, d, g),
                                "blowup n={n} k={k} ell={ell} d={d} g={g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_rendering() {
        let gm = geom(3, 2, 1, 1, 0);
        let c1 = &chern_classes_blowup(&gm)[1];
        assert_eq!(c1.to_string(), "4*h - E");
        let l = EClass::flag(CurveClass::Hyperplane)
            .scaled(1)
            .add(&EClass::zeta().scaled(-1));
        assert_eq!(l.to_string(), "-zeta + [hyperplane]");
        assert_eq!(EClass::zero().to_string(), "0");
    }
}
