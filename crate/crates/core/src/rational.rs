//! Exact rational scalars.
//!
//! Every coefficient in this crate is an arbitrary-precision fraction kept in
//! lowest terms with a positive denominator.  [`Rational`] is an alias for
//! [`num_rational::BigRational`], which maintains exactly those invariants;
//! this module adds the crate-wide text conventions: a rational prints as
//! `p/q`, or plain `p` when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds a rational from machine integers.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` where `p` and `q` are decimal integers, optionally
/// preceded by a single `-` sign on the numerator.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_text, den_text) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| format!("invalid integer `{num_text}`"))?;
    match den_text {
        None => Ok(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.parse().map_err(|_| format!("invalid integer `{d}`"))?;
            if den == BigInt::from(0) {
                return Err("denominator is zero".to_string());
            }
            Ok(Rational::new(num, den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert!(rat(0, 5).is_zero());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(-2, 3)), "-2/3");
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&integer(0)), "0");
    }

    #[test]
    fn parsing_round_trips() {
        for text in ["0", "7", "-7", "2/3", "-22/7"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
