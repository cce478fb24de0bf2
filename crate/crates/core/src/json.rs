//! A small, deterministic JSON document model.
//!
//! Reports are rendered with sorted object keys, two-space indentation, and
//! stable number formatting, so the same document always produces the same
//! bytes.  Integers are arbitrary precision and printed bare; rationals are
//! carried as strings (`"3/4"`, or `"3"` when integral) to keep exactness
//! explicit to consumers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

/// A JSON value with deterministic rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Null,
    Bool(bool),
    Int(BigInt),
    Str(String),
    Arr(Vec<Value>),
    Obj(BTreeMap<String, Value>),
}

impl Value {
    pub fn str(s: impl Into<String>) -> Value {
        Value::Str(s.into())
    }

    pub fn int(n: impl Into<BigInt>) -> Value {
        Value::Int(n.into())
    }

    /// A rational as a string, `p/q` or bare `p` for integers.
    pub fn rational(r: &Rational) -> Value {
        if r.denom().is_one() {
            Value::Str(r.numer().to_string())
        } else {
            Value::Str(format!("{}/{}", r.numer(), r.denom()))
        }
    }

    pub fn obj(pairs: impl IntoIterator<Item = (String, Value)>) -> Value {
        Value::Obj(pairs.into_iter().collect())
    }

    /// Inserts into an object value; panics on non-objects.
    pub fn set(&mut self, key: impl Into<String>, value: Value) {
        match self {
            Value::Obj(map) => {
                map.insert(key.into(), value);
            }
            _ => panic!("set on a non-object JSON value"),
        }
    }

    /// Renders the document; the same value always yields the same bytes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn is_scalar(&self) -> bool {
        !matches!(self, Value::Arr(_) | Value::Obj(_))
    }

    fn write_scalar(&self, out: &mut String) {
        match self {
            Value::Null => out.push_str("null"),
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::Int(n) => {
                let _ = write!(out, "{n}");
            }
            Value::Str(s) => write_escaped(out, s),
            _ => unreachable!("write_scalar on a container"),
        }
    }

    fn write(&self, out: &mut String, depth: usize) {
        match self {
            Value::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                if items.iter().all(Value::is_scalar) {
                    let mut inline = String::from("[");
                    for (i, item) in items.iter().enumerate() {
                        if i > 0 {
                            inline.push_str(", ");
                        }
                        item.write_scalar(&mut inline);
                    }
                    inline.push(']');
                    if inline.len() <= 60 {
                        out.push_str(&inline);
                        return;
                    }
                }
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    indent(out, depth + 1);
                    item.write(out, depth + 1);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, depth);
                out.push(']');
            }
            Value::Obj(map) => {
                if map.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push_str("{\n");
                for (i, (key, value)) in map.iter().enumerate() {
                    indent(out, depth + 1);
                    write_escaped(out, key);
                    out.push_str(": ");
                    value.write(out, depth + 1);
                    if i + 1 < map.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, depth);
                out.push('}');
            }
            scalar => scalar.write_scalar(out),
        }
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn write_escaped(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
