//! Gröbner bases over the rationals.
//!
//! The engine is Buchberger's algorithm with the normal selection strategy
//! (smallest lcm degree first) and the product and chain criteria, followed
//! by full interreduction.  The output of [`groebner_basis`] is the *reduced*
//! basis — monic, tail-reduced, sorted by leading monomial — which is unique
//! for an ideal and order, so identical ideals always produce identical
//! bases regardless of generator presentation.
//!
//! On top of the raw engine sit the ideal-theoretic operations used by the
//! geometric modules: normal forms and membership, elimination of variables
//! (via a block order), ideal intersection, saturation, zero-dimensionality
//! testing, and colength (the vector-space dimension of the quotient ring),
//! plus [`count_points_on_subspace`], the subtractive point count used when
//! walking overlapping affine charts.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::{Monomial, PolyRing};

/// Errors from ideal-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    /// A polynomial belongs to a different ring than the ideal.
    RingMismatch,
    /// A variable index is out of range for the ring.
    InvalidVariable(usize),
    /// Eliminating every variable would leave an empty ring.
    NoVariablesLeft,
    /// A quotient that should have been finite-dimensional is not; the named
    /// variable has no pure power among the leading monomials.
    NotZeroDimensional { variable: String },
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::RingMismatch => write!(f, "polynomial ring mismatch"),
            GroebnerError::InvalidVariable(i) => write!(f, "variable index {i} is out of range"),
            GroebnerError::NoVariablesLeft => {
                write!(f, "cannot eliminate every variable of the ring")
            }
            GroebnerError::NotZeroDimensional { variable } => write!(
                f,
                "the quotient is not finite-dimensional: no leading monomial is a pure power of `{variable}`"
            ),
        }
    }
}

impl std::error::Error for GroebnerError {}

/// A monomial order for Gröbner basis computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the crate default).
    DegRevLex,
    /// Lexicographic, first ring variable most significant.
    Lex,
    /// Block elimination order: graded reverse lexicographic on the `front`
    /// variables, ties broken by the same order on the remaining variables.
    /// Any polynomial whose leading monomial is free of the front block is
    /// entirely free of it.
    Block { front: Vec<usize> },
}

impl MonomialOrder {
    /// The block order that pushes the given variables to the front, for
    /// eliminating them.
    pub fn elimination(front: &[usize]) -> MonomialOrder {
        let mut front = front.to_vec();
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block { front }
    }
}

/// A monomial order resolved against a ring's variable count.
struct ResolvedOrder {
    kind: ResolvedKind,
}

enum ResolvedKind {
    DegRevLex,
    Lex,
    Block { front: Vec<usize>, rest: Vec<usize> },
}

fn grevlex_on(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exponent(v)).sum();
    let db: u32 = vars.iter().map(|&v| b.exponent(v)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for &v in vars.iter().rev() {
                if a.exponent(v) != b.exponent(v) {
                    return b.exponent(v).cmp(&a.exponent(v));
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

impl ResolvedOrder {
    fn new(order: &MonomialOrder, num_vars: usize) -> Result<ResolvedOrder, GroebnerError> {
        let kind = match order {
            MonomialOrder::DegRevLex => ResolvedKind::DegRevLex,
            MonomialOrder::Lex => ResolvedKind::Lex,
            MonomialOrder::Block { front } => {
                let mut front = front.clone();
                front.sort_unstable();
                front.dedup();
                if let Some(&bad) = front.iter().find(|&&v| v >= num_vars) {
                    return Err(GroebnerError::InvalidVariable(bad));
                }
                let rest: Vec<usize> =
                    (0..num_vars).filter(|v| !front.contains(v)).collect();
                ResolvedKind::Block { front, rest }
            }
        };
        Ok(ResolvedOrder { kind })
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            ResolvedKind::DegRevLex => a.cmp(b),
            ResolvedKind::Lex => {
                for i in 0..a.num_vars() {
                    if a.exponent(i) != b.exponent(i) {
                        return a.exponent(i).cmp(&b.exponent(i));
                    }
                }
                Ordering::Equal
            }
            ResolvedKind::Block { front, rest } => match grevlex_on(front, a, b) {
                Ordering::Equal => grevlex_on(rest, a, b),
                ord => ord,
            },
        }
    }
}

/// A polynomial as a descending list of terms under a resolved order.  All
/// interior Buchberger arithmetic uses this representation; the public API
/// converts at the boundary.
#[derive(Clone)]
struct OrderedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl OrderedPoly {
    fn from_multipoly(p: &MultiPoly, ord: &ResolvedOrder) -> OrderedPoly {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        OrderedPoly { terms }
    }

    fn to_multipoly(&self, ring: &PolyRing) -> MultiPoly {
        MultiPoly::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first().map(|(m, c)| (m.clone(), c.clone())) {
            if !lc.is_one() {
                for (_, c) in &mut self.terms {
                    *c /= &lc;
                }
            }
        }
    }

    /// `self - c * m * g`, by merging the two descending term lists.
    fn sub_mul(&self, g: &OrderedPoly, m: &Monomial, c: &Rational, ord: &ResolvedOrder) -> OrderedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match ord.cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(&g.terms[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 - &(&g.terms[j].1 * c);
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (gm, gc) in &g.terms[j..] {
            out.push((gm.mul(m), -(gc * c)));
        }
        OrderedPoly { terms: out }
    }
}

/// Fully reduces `f` against `basis`: no term of the result is divisible by
/// any basis leading monomial.
fn normal_form_internal(f: &OrderedPoly, basis: &[OrderedPoly], ord: &ResolvedOrder) -> OrderedPoly {
    let mut done: Vec<(Monomial, Rational)> = Vec::new();
    let mut cur = f.clone();
    'outer: while !cur.is_zero() {
        let (lm, lc) = (cur.lm().clone(), cur.lc().clone());
        for g in basis {
            if !g.is_zero() && g.lm().divides(&lm) {
                let m = lm.checked_div(g.lm()).expect("divisibility was checked");
                let c = &lc / g.lc();
                cur = cur.sub_mul(g, &m, &c, ord);
                continue 'outer;
            }
        }
        done.push((lm, lc));
        cur.terms.remove(0);
    }
    OrderedPoly { terms: done }
}

fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, ord: &ResolvedOrder) -> OrderedPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.checked_div(f.lm()).expect("lcm is divisible");
    let mg = lcm.checked_div(g.lm()).expect("lcm is divisible");
    let scaled: Vec<(Monomial, Rational)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&mf), c / f.lc()))
        .collect();
    OrderedPoly { terms: scaled }.sub_mul(g, &mg, &(Rational::one() / g.lc()), ord)
}

/// Buchberger's algorithm followed by interreduction; returns the reduced
/// basis, sorted by ascending leading monomial.
fn buchberger(gens: &[OrderedPoly], ord: &ResolvedOrder) -> Vec<OrderedPoly> {
    let mut basis: Vec<OrderedPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut g = g.clone();
            g.make_monic();
            basis.push(g);
        }
    }
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let pair_key = |basis: &[OrderedPoly], i: usize, j: usize| {
        (basis[i].lm().lcm(basis[j].lm()).degree(), i, j)
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
        }
    }
    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, i, j) = key;
        let lcm = basis[i].lm().lcm(basis[j].lm());
        // Product criterion: coprime leading monomials reduce to zero.
        if basis[i].lm().coprime(basis[j].lm()) {
            continue;
        }
        // Chain criterion: if some k has LM_k | lcm(i, j) and both (i, k) and
        // (j, k) were already treated, the pair (i, j) is redundant.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&pair_key(&basis, i.min(k), i.max(k)))
                && !pending.contains(&pair_key(&basis, j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let mut r = normal_form_internal(&s, &basis, ord);
        if !r.is_zero() {
            r.make_monic();
            basis.push(r);
            let t = basis.len() - 1;
            for i in 0..t {
                pending.insert(pair_key(&basis, i, t));
            }
        }
    }
    reduce_basis(basis, ord)
}

fn reduce_basis(mut basis: Vec<OrderedPoly>, ord: &ResolvedOrder) -> Vec<OrderedPoly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    // Minimal generating set: drop any element whose leading monomial is a
    // multiple of an earlier (hence smaller) one.
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    // Tail-reduce each element against the others.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<OrderedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = normal_form_internal(&minimal[i], &others, ord);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    reduced
}

/// An ideal, presented by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<MultiPoly>,
}

impl Ideal {
    /// Wraps generators; zero generators are kept but ignored by the engine.
    pub fn new(ring: PolyRing, gens: Vec<MultiPoly>) -> Result<Ideal, GroebnerError> {
        if gens.iter().any(|g| g.ring() != &ring) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(Ideal { ring, gens })
    }

    /// The ideal of the coordinate subspace `{x_v = 0 : v in vars}`.
    pub fn coordinate_subspace(ring: &PolyRing, vars: &[usize]) -> Ideal {
        let gens = vars.iter().map(|&v| MultiPoly::var(ring, v)).collect();
        Ideal {
            ring: ring.clone(),
            gens,
        }
    }

    /// The unit ideal `(1)`.
    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![MultiPoly::one(ring)],
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }
}

/// A reduced Gröbner basis: monic, tail-reduced, sorted by ascending leading
/// monomial.  Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    polys: Vec<MultiPoly>,
}

/// Computes the reduced Gröbner basis of `ideal` under `order`.
///
/// # Panics
///
/// Panics if a `Block` order names a variable outside the ring (construct
/// block orders with indices of the ideal's own ring).
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ord = ResolvedOrder::new(&order, ideal.ring.num_vars())
        .expect("order indices must fit the ring");
    let gens: Vec<OrderedPoly> = ideal
        .gens
        .iter()
        .map(|g| OrderedPoly::from_multipoly(g, &ord))
        .collect();
    let basis = buchberger(&gens, &ord);
    GroebnerBasis {
        ring: ideal.ring.clone(),
        order,
        polys: basis.iter().map(|g| g.to_multipoly(&ideal.ring)).collect(),
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The reduced basis elements, ascending by leading monomial.
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    fn resolved(&self) -> ResolvedOrder {
        ResolvedOrder::new(&self.order, self.ring.num_vars()).expect("stored order is valid")
    }

    /// Leading monomials of the basis, under this basis's order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let ord = self.resolved();
        self.polys
            .iter()
            .map(|p| {
                OrderedPoly::from_multipoly(p, &ord).lm().clone()
            })
            .collect()
    }

    /// The unique fully reduced remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.ring(), &self.ring, "ring mismatch");
        let ord = self.resolved();
        let basis: Vec<OrderedPoly> = self
            .polys
            .iter()
            .map(|p| OrderedPoly::from_multipoly(p, &ord))
            .collect();
        normal_form_internal(&OrderedPoly::from_multipoly(f, &ord), &basis, &ord)
            .to_multipoly(&self.ring)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    /// True when the quotient ring is a finite-dimensional vector space:
    /// every variable has a pure power among the leading monomials (or the
    /// ideal is the unit ideal).
    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_power_box().is_ok()
    }

    /// For each variable, the least exponent of a pure-power leading
    /// monomial; errors on the first variable without one.
    fn pure_power_box(&self) -> Result<Vec<u32>, GroebnerError> {
        if self.is_unit_ideal() {
            return Ok(vec![0; self.ring.num_vars()]);
        }
        let lms = self.leading_monomials();
        let n = self.ring.num_vars();
        let mut bounds = Vec::with_capacity(n);
        for v in 0..n {
            let best = lms
                .iter()
                .filter(|m| {
                    m.exponent(v) > 0 && m.degree() == m.exponent(v)
                })
                .map(|m| m.exponent(v))
                .min();
            match best {
                Some(b) => bounds.push(b),
                None => {
                    return Err(GroebnerError::NotZeroDimensional {
                        variable: self.ring.var_name(v).to_string(),
                    })
                }
            }
        }
        Ok(bounds)
    }

    /// The dimension of the quotient ring as a rational vector space: the
    /// number of monomials divisible by no leading monomial.  Zero for the
    /// unit ideal; an error when the quotient is infinite-dimensional.
    pub fn colength(&self) -> Result<u64, GroebnerError> {
        let bounds = self.pure_power_box()?;
        if self.is_unit_ideal() {
            return Ok(0);
        }
        let lms = self.leading_monomials();
        // Scan the finite box under the pure-power staircase.
        let n = bounds.len();
        let mut exps = vec![0u32; n];
        let mut count = 0u64;
        'scan: loop {
            let m = Monomial::from_exponents(exps.clone());
            if !lms.iter().any(|lm| lm.divides(&m)) {
                count += 1;
            }
            for i in 0..n {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    continue 'scan;
                }
                exps[i] = 0;
            }
            break;
        }
        Ok(count)
    }
}

/// Rebuilds `p` (whose ring equals `target` structurally) on `target`'s
/// handle.
fn rehome(p: &MultiPoly, target: &PolyRing) -> MultiPoly {
    debug_assert_eq!(p.ring(), target);
    MultiPoly::from_terms(target, p.terms().map(|(m, c)| (m.clone(), c.clone())))
}

/// Result of eliminating variables: an ideal over the smaller ring that
/// keeps the remaining variables, in their original order and with their
/// original names.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal, GroebnerError> {
    let n = ideal.ring.num_vars();
    let mut drop = drop.to_vec();
    drop.sort_unstable();
    drop.dedup();
    if let Some(&bad) = drop.iter().find(|&&v| v >= n) {
        return Err(GroebnerError::InvalidVariable(bad));
    }
    let kept: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
    if kept.is_empty() {
        return Err(GroebnerError::NoVariablesLeft);
    }
    let kept_names: Vec<&str> = kept.iter().map(|&v| ideal.ring.var_name(v)).collect();
    let sub_ring = PolyRing::new(&kept_names).expect("kept names are valid and distinct");
    let mut map = vec![None; n];
    for (j, &v) in kept.iter().enumerate() {
        map[v] = Some(j);
    }
    let gb = groebner_basis(ideal, MonomialOrder::elimination(&drop));
    let mut gens = Vec::new();
    for p in gb.polys() {
        if drop.iter().all(|&v| p.degree_in(v).unwrap_or(0) == 0) {
            gens.push(p.project(&sub_ring, &map).expect("checked variable-free"));
        }
    }
    Ideal::new(sub_ring, gens)
}

/// Extends the ring with a fresh variable appended at the end.
fn extend_ring(ring: &PolyRing, base: &str) -> (PolyRing, Vec<Option<usize>>) {
    let mut names: Vec<String> = ring.var_names().to_vec();
    names.push(ring.fresh_name(base));
    let ext = PolyRing::new(&names).expect("extension names are valid");
    let map: Vec<Option<usize>> = (0..ring.num_vars()).map(Some).collect();
    (ext, map)
}

/// The saturation `I : f^∞`, the ideal of functions pushed into `I` by some
/// power of `f`.  Computed by eliminating `t` from `I + (1 - t·f)`.
pub fn saturate_single(ideal: &Ideal, f: &MultiPoly) -> Result<Ideal, GroebnerError> {
    if f.ring() != &ideal.ring {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_zero() {
        // Some power of zero (namely zero itself) is in every ideal.
        return Ok(Ideal::unit(&ideal.ring));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let (ext, map) = extend_ring(&ideal.ring, "t");
    let t = MultiPoly::var(&ext, ext.num_vars() - 1);
    let mut gens: Vec<MultiPoly> = ideal
        .gens
        .iter()
        .map(|g| g.project(&ext, &map).expect("extension keeps all variables"))
        .collect();
    let f_ext = f.project(&ext, &map).expect("extension keeps all variables");
    gens.push(&MultiPoly::one(&ext) - &(&t * &f_ext));
    let extended = Ideal::new(ext.clone(), gens)?;
    let eliminated = eliminate(&extended, &[ext.num_vars() - 1])?;
    let gens = eliminated
        .gens
        .iter()
        .map(|g| rehome(g, &ideal.ring))
        .collect();
    Ideal::new(ideal.ring.clone(), gens)
}

/// The intersection `I ∩ J`, computed by eliminating `t` from
/// `t·I + (1 - t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if a.ring != b.ring {
        return Err(GroebnerError::RingMismatch);
    }
    let (ext, map) = extend_ring(&a.ring, "t");
    let t = MultiPoly::var(&ext, ext.num_vars() - 1);
    let one_minus_t = &MultiPoly::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&t * &g.project(&ext, &map).expect("extension keeps all variables"));
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &g.project(&ext, &map).expect("extension keeps all variables"));
    }
    let extended = Ideal::new(ext.clone(), gens)?;
    let eliminated = eliminate(&extended, &[ext.num_vars() - 1])?;
    let gens = eliminated.gens.iter().map(|g| rehome(g, &a.ring)).collect();
    Ideal::new(a.ring.clone(), gens)
}

/// The saturation `I : J^∞`, the intersection of the saturations of `I` at
/// each generator of `J`.  Geometrically: remove from the scheme of `I`
/// every component supported inside the zero set of `J`.
pub fn saturate(ideal: &Ideal, other: &Ideal) -> Result<Ideal, GroebnerError> {
    if ideal.ring != other.ring {
        return Err(GroebnerError::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for f in &other.gens {
        if f.is_zero() {
            continue;
        }
        let sat = saturate_single(ideal, f)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => intersect(&prev, &sat)?,
        });
    }
    // J = (0): the zero set of J is everything, so everything is removed.
    Ok(acc.unwrap_or_else(|| Ideal::unit(&ideal.ring)))
}

/// The number of points (counted with multiplicity over the algebraic
/// closure) of the scheme of `ideal` that lie *on* the coordinate subspace
/// `{x_v = 0 : v in prior_vars}`:
///
/// ```text
/// colength(I) − colength(I : (x_{v1}, …, x_{vr})^∞)
/// ```
///
/// The saturation removes exactly the components supported off the
/// subspace, so the difference is the contribution of points on it.  With
/// no prior variables the subspace is the whole space and this is the plain
/// colength.  Errors when either quotient is infinite-dimensional.
pub fn count_points_on_subspace(ideal: &Ideal, prior_vars: &[usize]) -> Result<u64, GroebnerError> {
    let total = groebner_basis(ideal, MonomialOrder::DegRevLex).colength()?;
    if prior_vars.is_empty() {
        return Ok(total);
    }
    let prior = Ideal::coordinate_subspace(&ideal.ring, prior_vars);
    let old = groebner_basis(&saturate(ideal, &prior)?, MonomialOrder::DegRevLex).colength()?;
    Ok(total
        .checked_sub(old)
        .expect("saturation can only shrink the quotient"))
}
