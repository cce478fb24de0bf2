//! Sparse multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] stores its terms in a `BTreeMap` keyed by [`Monomial`]
//! under the graded reverse lexicographic order, with two invariants: no
//! stored coefficient is zero, and every key has the ring's variable count.
//! The map order makes the *last* entry the leading term.
//!
//! The canonical text form (see the `Display` impl) lists terms in
//! descending order with explicit `*` and `^`, and is exactly the form the
//! expression parser accepts, so printing and re-parsing is the identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, Rational};
use crate::ring::{Monomial, PolyRing};

/// The order of vanishing along a variable or a set of variables.
///
/// The zero polynomial vanishes to every order, so its order is
/// [`AxisOrder::Infinite`]; the derived `Ord` places `Infinite` above every
/// finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxisOrder {
    /// Vanishing to exactly this finite order.
    Finite(u32),
    /// The zero polynomial.
    Infinite,
}

impl AxisOrder {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            AxisOrder::Finite(m) => Some(m),
            AxisOrder::Infinite => None,
        }
    }

    /// True unless this is the order of the zero polynomial.
    pub fn is_finite(self) -> bool {
        matches!(self, AxisOrder::Finite(_))
    }
}

impl fmt::Display for AxisOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisOrder::Finite(m) => write!(f, "{m}"),
            AxisOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Errors from polynomial operations that re-home terms between rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// A variable that must not occur does occur.
    VariableAppears(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::VariableAppears(name) => {
                write!(f, "variable `{name}` appears but has no image in the target ring")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// A sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero(ring: &PolyRing) -> MultiPoly {
        MultiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(ring: &PolyRing) -> MultiPoly {
        MultiPoly::constant(ring, Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(ring: &PolyRing, c: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.num_vars()), c);
        }
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(ring: &PolyRing, i: usize) -> MultiPoly {
        MultiPoly::term(ring, Monomial::var(ring.num_vars(), i), Rational::one())
    }

    /// A single term `c * m`.
    pub fn term(ring: &PolyRing, m: Monomial, c: Rational) -> MultiPoly {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial/ring mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sums an iterator of terms, combining duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &PolyRing, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), ring.num_vars(), "monomial/ring mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        MultiPoly {
            ring: ring.clone(),
            terms: map,
        }
    }

    /// The ring this polynomial lives in.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a (possibly zero) constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending graded reverse lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The leading (largest) term under graded reverse lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// The coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `i`, or `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(i)).max()
    }

    /// Smallest exponent of variable `i` across all terms.
    pub fn order_in(&self, i: usize) -> AxisOrder {
        self.terms
            .keys()
            .map(|m| m.exponent(i))
            .min()
            .map_or(AxisOrder::Infinite, AxisOrder::Finite)
    }

    /// Order of vanishing along the coordinate subspace `{x_v = 0 : v in
    /// vars}`: the smallest combined degree of the given variables in any
    /// term.
    pub fn order_along(&self, vars: &[usize]) -> AxisOrder {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.exponent(v)).sum::<u32>())
            .min()
            .map_or(AxisOrder::Infinite, AxisOrder::Finite)
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    /// Raises to a non-negative integer power.
    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        assert!(i < self.ring.num_vars(), "variable index out of range");
        MultiPoly::from_terms(
            &self.ring,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponent(i);
                if e == 0 {
                    return None;
                }
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                Some((Monomial::from_exponents(exps), c * Rational::from_integer(e.into())))
            }),
        )
    }

    /// Substitutes `images[i]` for variable `i`.  All images must share one
    /// ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(
            images.len(),
            self.ring.num_vars(),
            "need one image per variable"
        );
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .expect("rings are never empty");
        assert!(
            images.iter().all(|p| p.ring == target),
            "images must share a ring"
        );
        // Precompute the powers of each image that actually occur.
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(images.len());
        for (i, image) in images.iter().enumerate() {
            let max = self.degree_in(i).unwrap_or(0);
            let mut pows = Vec::with_capacity(max as usize + 1);
            pows.push(MultiPoly::one(&target));
            for e in 1..=max {
                let next = &pows[(e - 1) as usize] * image;
                pows.push(next);
            }
            powers.push(pows);
        }
        let mut acc = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.num_vars(), "need one value per variable");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Sets variable `i` to zero (drops every term containing it).
    pub fn set_var_zero(&self, i: usize) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(i) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divides by `x_i^s`, or returns `None` when some term has a smaller
    /// exponent on `x_i`.
    pub fn div_by_var_power(&self, i: usize, s: u32) -> Option<MultiPoly> {
        if s == 0 {
            return Some(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exponent(i) < s {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= s;
            terms.insert(Monomial::from_exponents(exps), c.clone());
        }
        Some(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// The coefficient of `x_i^e`, viewed as a polynomial in the remaining
    /// variables (the power of `x_i` is removed from the result).
    pub fn coefficient_of(&self, i: usize, e: u32) -> MultiPoly {
        MultiPoly::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exponent(i) == e).map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps[i] = 0;
                (Monomial::from_exponents(exps), c.clone())
            }),
        )
    }

    /// Exact division: returns `q` with `self = q * g`, or `None` when
    /// `self` is not a multiple of `g`.
    ///
    /// # Panics
    ///
    /// Panics if `g` is zero.
    pub fn div_exact(&self, g: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.ring, g.ring, "ring mismatch");
        let (glm, glc) = g.leading_term().expect("division by the zero polynomial");
        let mut cur = self.clone();
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((lm, lc)) = cur.leading_term() {
            let t = lm.checked_div(glm)?;
            let c = lc / glc;
            cur = &cur - &g.mul_term(&t, &c);
            quot.insert(t, c);
        }
        Some(MultiPoly {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Moves this polynomial into `target`, sending variable `i` to
    /// `map[i]`.  A variable mapped to `None` must not occur.
    pub fn project(&self, target: &PolyRing, map: &[Option<usize>]) -> Result<MultiPoly, PolyError> {
        assert_eq!(map.len(), self.ring.num_vars(), "need one map entry per variable");
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.num_vars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(PolyError::VariableAppears(self.ring.var_name(i).to_string()))
                    }
                }
            }
            terms.push((Monomial::from_exponents(exps), c.clone()));
        }
        Ok(MultiPoly::from_terms(target, terms))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.var_name(i))?;
        if e >= 2 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in descending graded reverse lexicographic
    /// order, explicit `*` and `^`, coefficients printed as `p/q`, and unit
    /// coefficients omitted on non-constant monomials.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: acc,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rat};

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    fn x(r: &PolyRing) -> MultiPoly {
        MultiPoly::var(r, 0)
    }

    fn y(r: &PolyRing) -> MultiPoly {
        MultiPoly::var(r, 1)
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let p = &(&x(&r) + &y(&r)) * &(&x(&r) - &y(&r));
        let q = &x(&r).pow(2) - &y(&r).pow(2);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(MultiPoly::zero(&r).total_degree(), None);
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let r = ring();
        let p = &x(&r) + &x(&r).scale(&integer(-1));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        let q = MultiPoly::from_terms(
            &r,
            vec![
                (Monomial::var(3, 0), integer(2)),
                (Monomial::var(3, 0), integer(-2)),
                (Monomial::one(3), integer(1)),
            ],
        );
        assert_eq!(q, MultiPoly::one(&r));
    }

    #[test]
    fn display_canonical_form() {
        let r = ring();
        let p = &(&x(&r).pow(2).scale(&integer(1)) - &(&x(&r) * &y(&r)).scale(&integer(2)))
            + &MultiPoly::constant(&r, rat(1, 2));
        assert_eq!(p.to_string(), "x^2 - 2*x*y + 1/2");
        assert_eq!(MultiPoly::zero(&r).to_string(), "0");
        assert_eq!((-&MultiPoly::one(&r)).to_string(), "-1");
        assert_eq!((-&x(&r)).to_string(), "-x");
        assert_eq!(x(&r).scale(&rat(1, 3)).to_string(), "1/3*x");
    }

    #[test]
    fn orders_and_parts() {
        let r = ring();
        // p = x^3 + x*y*z + z^2 * x
        let p = &(&x(&r).pow(3) + &(&(&x(&r) * &y(&r)) * &MultiPoly::var(&r, 2)))
            + &(&MultiPoly::var(&r, 2).pow(2) * &x(&r));
        assert_eq!(p.order_in(0), AxisOrder::Finite(1));
        assert_eq!(p.order_in(1), AxisOrder::Finite(0));
        assert_eq!(p.order_along(&[0, 1]), AxisOrder::Finite(1));
        assert_eq!(p.homogeneous_part(3), p);
        assert!(p.homogeneous_part(2).is_zero());
        assert_eq!(MultiPoly::zero(&r).order_along(&[0]), AxisOrder::Infinite);
        assert!(AxisOrder::Infinite > AxisOrder::Finite(1_000_000));
    }

    #[test]
    fn substitution_is_multiplicative() {
        let r = ring();
        let s = PolyRing::new(&["u", "v"]).unwrap();
        let images = vec![
            MultiPoly::var(&s, 0),
            &MultiPoly::var(&s, 0) * &MultiPoly::var(&s, 1),
            MultiPoly::one(&s),
        ];
        let p = &x(&r) * &y(&r);
        let q = &x(&r) + &MultiPoly::var(&r, 2);
        let lhs = (&p * &q).substitute(&images);
        let rhs = &p.substitute(&images) * &q.substitute(&images);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation() {
        let r = ring();
        let p = &(&x(&r).pow(2) + &y(&r)) - &MultiPoly::one(&r);
        let v = p.eval(&[rat(1, 2), integer(3), integer(0)]);
        assert_eq!(v, rat(9, 4));
    }

    #[test]
    fn derivative_product_rule() {
        let r = ring();
        let p = &x(&r).pow(2) + &(&y(&r) * &x(&r));
        let q = &y(&r).pow(3) - &x(&r);
        let lhs = (&p * &q).derivative(0);
        let rhs = &(&p.derivative(0) * &q) + &(&p * &q.derivative(0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let p = &x(&r).pow(2) - &y(&r).pow(2);
        let d = &x(&r) - &y(&r);
        assert_eq!(p.div_exact(&d).unwrap(), &x(&r) + &y(&r));
        assert_eq!((&p + &MultiPoly::one(&r)).div_exact(&d), None);
        let m = &p * &MultiPoly::var(&r, 2).pow(2);
        assert_eq!(m.div_by_var_power(2, 2).unwrap(), p);
        assert_eq!(m.div_by_var_power(2, 3), None);
    }

    #[test]
    fn coefficient_extraction() {
        let r = ring();
        // p = x^2*y + 2*x^2 + z
        let p = &(&x(&r).pow(2) * &y(&r))
            + &(&x(&r).pow(2).scale(&integer(2)) + &MultiPoly::var(&r, 2));
        assert_eq!(p.coefficient_of(0, 2), &y(&r) + &MultiPoly::constant(&r, integer(2)));
        assert_eq!(p.coefficient_of(0, 0), MultiPoly::var(&r, 2));
        assert_eq!(p.set_var_zero(0), MultiPoly::var(&r, 2));
    }

    #[test]
    fn projection_between_rings() {
        let r = ring();
        let s = PolyRing::new(&["x", "z"]).unwrap();
        let p = &x(&r).pow(2) + &MultiPoly::var(&r, 2);
        let q = p.project(&s, &[Some(0), None, Some(1)]).unwrap();
        assert_eq!(q.to_string(), "x^2 + z");
        let bad = &x(&r) + &y(&r);
        assert_eq!(
            bad.project(&s, &[Some(0), None, Some(1)]),
            Err(PolyError::VariableAppears("y".into()))
        );
    }
}
