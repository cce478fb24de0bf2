//! Polynomial rings and monomials.
//!
//! A [`PolyRing`] fixes an ordered list of variable names; every polynomial
//! carries a handle to its ring, and mixing rings is rejected.  Two rings
//! compare equal exactly when their variable lists agree — a ring is its
//! presentation, not its allocation.
//!
//! A [`Monomial`] is an exponent vector.  Its `Ord` implementation is the
//! graded reverse lexicographic order (total degree first; ties broken by the
//! *smaller* exponent on the *last* differing variable winning), which is the
//! default monomial order throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Errors from building a [`PolyRing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// The variable list was empty.
    NoVariables,
    /// A variable name is not an identifier (`[A-Za-z][A-Za-z0-9_]*`).
    InvalidName(String),
    /// The same name was given twice.
    DuplicateName(String),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::NoVariables => write!(f, "a polynomial ring needs at least one variable"),
            RingError::InvalidName(name) => write!(
                f,
                "invalid variable name `{name}`: expected an identifier ([A-Za-z][A-Za-z0-9_]*)"
            ),
            RingError::DuplicateName(name) => write!(f, "duplicate variable name `{name}`"),
        }
    }
}

impl std::error::Error for RingError {}

/// Returns true when `s` is an identifier: `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug)]
struct RingInner {
    vars: Vec<String>,
}

/// A polynomial ring over the rationals with named, ordered variables.
///
/// Cloning is cheap (the variable list is shared).
#[derive(Clone, Debug)]
pub struct PolyRing {
    inner: Arc<RingInner>,
}

impl PolyRing {
    /// Creates a ring with the given variable names, in the given order.
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<PolyRing, RingError> {
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        let mut names = Vec::with_capacity(vars.len());
        for v in vars {
            let name = v.as_ref();
            if !is_identifier(name) {
                return Err(RingError::InvalidName(name.to_string()));
            }
            if names.iter().any(|n: &String| n == name) {
                return Err(RingError::DuplicateName(name.to_string()));
            }
            names.push(name.to_string());
        }
        Ok(PolyRing {
            inner: Arc::new(RingInner { vars: names }),
        })
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.inner.vars.len()
    }

    /// All variable names, in ring order.
    pub fn var_names(&self) -> &[String] {
        &self.inner.vars
    }

    /// The name of variable `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn var_name(&self, i: usize) -> &str {
        &self.inner.vars[i]
    }

    /// The index of the variable called `name`, if any.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    /// A name based on `base` that does not collide with any variable of this
    /// ring (underscores are appended until it is fresh).
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.vars == other.inner.vars
    }
}

impl Eq for PolyRing {}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.inner.vars.join(", "))
    }
}

/// An exponent vector.  Ordered by graded reverse lexicographic comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1` on `num_vars` variables.
    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The monomial `x_i` on `num_vars` variables.
    ///
    /// # Panics
    ///
    /// Panics if `i >= num_vars`.
    pub fn var(num_vars: usize, i: usize) -> Monomial {
        Monomial::var_pow(num_vars, i, 1)
    }

    /// The monomial `x_i^e` on `num_vars` variables.
    pub fn var_pow(num_vars: usize, i: usize, e: u32) -> Monomial {
        assert!(i < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[i] = e;
        Monomial { exps }
    }

    /// Builds a monomial directly from an exponent vector.
    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// The exponent of variable `i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// Number of variables this monomial is over.
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when the division leaves a negative exponent.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when no variable appears in both monomials.
    pub fn coprime(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order: higher total degree wins; on equal
    /// degree, the monomial with the smaller exponent on the last variable
    /// where they differ is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                for i in (0..self.exps.len()).rev() {
                    if self.exps[i] != other.exps[i] {
                        return other.exps[i].cmp(&self.exps[i]);
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
