//! Exact-arithmetic analysis of one-dimensional holomorphic foliations on
//! projective space whose singular locus contains curves.
//!
//! The crate provides:
//!
//! * sparse multivariate polynomials over arbitrary-precision rationals
//!   ([`poly`]), with a parser and canonical printer ([`parser`]);
//! * a Gröbner-basis engine with elimination, saturation, intersection,
//!   zero-dimensionality tests and colength counting ([`groebner`]);
//! * affine charts of degree-`k` foliations on `P^n`, chart transitions, and
//!   Milnor-number bookkeeping for isolated singularities ([`foliation`]);
//! * blowups along coordinate-axis curves: multiplicity profiles, residual
//!   polynomials, total/strict transforms, and counts of singularities on the
//!   exceptional divisor ([`blowup`]);
//! * a symbolic Chow-ring calculator for the blowup of `P^n` along a curve,
//!   with Chern classes and Baum–Bott-style integrals ([`chow`]);
//! * closed-form singularity counts and curve contributions ([`counts`]);
//! * deformations of foliations tangent to complete-intersection curves
//!   ([`deformation`]);
//! * a problem-file format, JSON reports and command drivers used by the
//!   `foliations` binary ([`input`], [`json`], [`driver`]).
//!
//! Everything is exact: no floating point is used anywhere.  All pipelines
//! are deterministic — identical inputs produce byte-identical reports.
//!
//! ```
//! use foliations::ring::PolyRing;
//! use foliations::parser::parse_polynomial;
//! use foliations::groebner::{groebner_basis, Ideal, MonomialOrder};
//!
//! let ring = PolyRing::new(&["x", "y"]).unwrap();
//! let f = parse_polynomial(&ring, "x^2 + y^2").unwrap();
//! let g = parse_polynomial(&ring, "x*y").unwrap();
//! let ideal = Ideal::new(ring.clone(), vec![f, g]).unwrap();
//! let gb = groebner_basis(&ideal, MonomialOrder::DegRevLex);
//! assert_eq!(gb.polys().len(), 3);
//! ```

pub mod rational;
pub mod ring;
pub mod poly;
pub mod parser;
pub mod matrix;
pub mod groebner;
pub mod foliation;
pub mod blowup;
pub mod chow;
pub mod counts;
pub mod deformation;
pub mod input;
pub mod json;
pub mod driver;

pub use poly::{AxisOrder, MultiPoly};
pub use rational::Rational;
pub use ring::{Monomial, PolyRing};
