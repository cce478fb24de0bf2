//! Parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    :=  term  (('+' | '-') term)*
//! term    :=  factor ('*' factor)*
//! factor  :=  '-' factor  |  power
//! power   :=  atom ['^' INT]
//! atom    :=  IDENT  |  INT ['/' INT]  |  '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*` and must name ring variables.
//! Integer literals are unsigned decimals; `/` is only allowed between two
//! integer literals (forming an exact rational), and exponents are
//! non-negative integers.  Multiplication is always explicit.  The canonical
//! printer in [`crate::poly`] emits exactly this grammar, so parsing a
//! printed polynomial returns it unchanged.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::PolyRing;

/// A parse failure, with the character position (0-based) where it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Int(s) => format!("integer `{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Slash => "`/`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push((start, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((start, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((start, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((start, Token::Caret));
                i += 1;
            }
            '/' => {
                tokens.push((start, Token::Slash));
                i += 1;
            }
            '(' => {
                tokens.push((start, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((start, Token::RParen));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let mut text = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    text.push(chars[i]);
                    i += 1;
                }
                tokens.push((start, Token::Int(text)));
            }
            _ if c.is_ascii_alphabetic() => {
                let mut text = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    text.push(chars[i]);
                    i += 1;
                }
                tokens.push((start, Token::Ident(text)));
            }
            _ => {
                return Err(ParseError {
                    position: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.input_len, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn parse_expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    acc = &acc + &self.parse_term()?;
                }
                Some(Token::Minus) => {
                    self.advance();
                    acc = &acc - &self.parse_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.advance();
                    acc = &acc * &self.parse_factor()?;
                }
                Some(Token::Slash) => {
                    return Err(self.error("`/` is only allowed between integer literals"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<MultiPoly, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.advance();
            return Ok(-&self.parse_factor()?);
        }
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            let pos = self.here();
            match self.advance() {
                Some((_, Token::Int(text))) => {
                    let e: u32 = text.parse().map_err(|_| ParseError {
                        position: pos,
                        message: format!("exponent `{text}` is too large"),
                    })?;
                    return Ok(base.pow(e));
                }
                Some((p, tok)) => {
                    return Err(ParseError {
                        position: p,
                        message: format!(
                            "expected a non-negative integer exponent, found {}",
                            tok.describe()
                        ),
                    })
                }
                None => {
                    return Err(ParseError {
                        position: pos,
                        message: "expected a non-negative integer exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<MultiPoly, ParseError> {
        let pos = self.here();
        match self.advance() {
            Some((_, Token::Ident(name))) => match self.ring.var_index(&name) {
                Some(i) => Ok(MultiPoly::var(self.ring, i)),
                None => Err(ParseError {
                    position: pos,
                    message: format!(
                        "unknown variable `{name}` (ring variables: {})",
                        self.ring.var_names().join(", ")
                    ),
                }),
            },
            Some((_, Token::Int(text))) => {
                let num: BigInt = text.parse().expect("digits parse as an integer");
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.advance();
                    let dpos = self.here();
                    match self.advance() {
                        Some((_, Token::Int(dtext))) => {
                            let den: BigInt = dtext.parse().expect("digits parse as an integer");
                            if den.is_zero() {
                                return Err(ParseError {
                                    position: dpos,
                                    message: "denominator is zero".into(),
                                });
                            }
                            Ok(MultiPoly::constant(self.ring, Rational::new(num, den)))
                        }
                        Some((p, tok)) => Err(ParseError {
                            position: p,
                            message: format!(
                                "`/` is only allowed between integer literals, found {}",
                                tok.describe()
                            ),
                        }),
                        None => Err(ParseError {
                            position: dpos,
                            message: "`/` is only allowed between integer literals".into(),
                        }),
                    }
                } else {
                    Ok(MultiPoly::constant(self.ring, Rational::from_integer(num)))
                }
            }
            Some((_, Token::LParen)) => {
                let inner = self.parse_expr()?;
                match self.advance() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((p, tok)) => Err(ParseError {
                        position: p,
                        message: format!("expected `)`, found {}", tok.describe()),
                    }),
                    None => Err(ParseError {
                        position: self.input_len,
                        message: "unbalanced `(`".into(),
                    }),
                }
            }
            Some((p, tok)) => Err(ParseError {
                position: p,
                message: format!("expected a variable, number or `(`, found {}", tok.describe()),
            }),
            None => Err(ParseError {
                position: pos,
                message: "unexpected end of expression".into(),
            }),
        }
    }
}

/// Parses an expression into a polynomial of `ring`.
pub fn parse_polynomial(ring: &PolyRing, input: &str) -> Result<MultiPoly, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
        input_len: input.chars().count(),
    };
    let poly = parser.parse_expr()?;
    if let Some((p, tok)) = parser.tokens.get(parser.pos) {
        return Err(ParseError {
            position: *p,
            message: format!("unexpected {} after the expression", tok.describe()),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_basic_expressions() {
        let r = ring();
        let p = parse_polynomial(&r, "x^2 - 2*x*y + 1/2").unwrap();
        assert_eq!(p.to_string(), "x^2 - 2*x*y + 1/2");
        let q = parse_polynomial(&r, "(x + y)*(x - y)").unwrap();
        assert_eq!(q, parse_polynomial(&r, "x^2 - y^2").unwrap());
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert_eq!(
            parse_polynomial(&r, "-x^2").unwrap(),
            -&parse_polynomial(&r, "x^2").unwrap()
        );
        assert_eq!(
            parse_polynomial(&r, "2/4").unwrap(),
            MultiPoly::constant(&r, rat(1, 2))
        );
    }

    #[test]
    fn rejects_malformed_input() {
        let r = ring();
        for (text, fragment) in [
            ("x + ", "unexpected end"),
            ("w", "unknown variable `w`"),
            ("x/2", "only allowed between integer literals"),
            ("1/x", "only allowed between integer literals"),
            ("1/0", "denominator is zero"),
            ("x^-2", "non-negative integer exponent"),
            ("x^y", "non-negative integer exponent"),
            ("(x + y", "unbalanced `(`"),
            ("x y", "unexpected identifier `y` after the expression"),
            ("x & y", "unexpected character `&`"),
            ("2x", "unexpected identifier `x`"),
        ] {
            let err = parse_polynomial(&r, text).unwrap_err();
            assert!(
                err.message.contains(fragment),
                "for `{text}` expected message containing `{fragment}`, got `{}`",
                err.message
            );
        }
    }

    #[test]
    fn error_positions_point_at_the_problem() {
        let r = ring();
        let err = parse_polynomial(&r, "x + w*y").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_polynomial(&r, "x ^ -1").unwrap_err();
        assert_eq!(err.position, 4);
    }

    proptest! {
        /// Printing then parsing is the identity on polynomials.
        #[test]
        fn print_parse_round_trip(raw in proptest::collection::vec(
            (proptest::collection::vec(0u32..4, 3), -20i64..20, 1i64..6),
            0..12,
        )) {
            let r = ring();
            let poly = MultiPoly::from_terms(
                &r,
                raw.into_iter().map(|(exps, num, den)| {
                    (crate::ring::Monomial::from_exponents(exps), rat(num, den))
                }),
            );
            let reparsed = parse_polynomial(&r, &poly.to_string()).unwrap();
            prop_assert_eq!(reparsed, poly);
        }
    }
}
