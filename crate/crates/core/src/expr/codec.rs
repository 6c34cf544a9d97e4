//! Digit encodings of circle expressions: binary for plain circles
//! (`(` = 1, `)` = 0) and base 4 when marked circles occur
//! (`)` = 0, `(` = 1, `]` = 2, `[` = 3).
//!
//! The `Expr` encoders write the canonical factor order; the `_str`
//! variants encode a well-formed string exactly as written.
use num_bigint::BigUint;
use num_traits::{Num, Zero};

use super::parse::{parse, parse_marked, validate};
use super::{Expr, Node};
use crate::error::{Error, Result};
use crate::family::FamilyId;

/// Binary digits, most significant first, and their value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    pub digits: String,
    pub value: BigUint,
}

fn check(e: &Expr, marked_ok: bool, allowed: &'static str) -> Result<()> {
    for n in e.factors() {
        match n {
            Node::Circle(c) => check(c, marked_ok, allowed)?,
            Node::Marked(c) if marked_ok => check(c, marked_ok, allowed)?,
            other => {
                return Err(Error::UnsupportedNode {
                    found: other.kind_name(),
                    allowed,
                })
            }
        }
    }
    Ok(())
}

fn radix_value(digits: &str, radix: u32) -> BigUint {
    if digits.is_empty() {
        BigUint::zero()
    } else {
        BigUint::from_str_radix(digits, radix).expect("digits are in range")
    }
}

pub fn encode_binary(e: &Expr) -> Result<BinaryCode> {
    check(e, false, "circle")?;
    encode_binary_str(&e.to_string())
}

/// Encodes a well-formed string of parentheses as written.
pub fn encode_binary_str(s: &str) -> Result<BinaryCode> {
    let digits = map_tokens(s, |c| match c {
        '(' => Some('1'),
        ')' => Some('0'),
        _ => None,
    })?;
    Ok(BinaryCode {
        value: radix_value(&digits, 2),
        digits,
    })
}

fn map_tokens(s: &str, f: impl Fn(char) -> Option<char>) -> Result<String> {
    if !validate(s) {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("not a well-formed string: {s:?}"),
        });
    }
    s.chars()
        .enumerate()
        .map(|(i, c)| {
            f(c).ok_or_else(|| Error::Parse {
                pos: i,
                msg: format!("character {c:?} has no digit"),
            })
        })
        .collect()
}

/// Inverse of [`encode_binary`] on its digit string.
pub fn decode_binary(digits: &str) -> Result<Expr> {
    let s = digits
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '1' => Ok('('),
            '0' => Ok(')'),
            _ => Err(Error::Parse {
                pos: i,
                msg: format!("not a binary digit: {c:?}"),
            }),
        })
        .collect::<Result<String>>()?;
    parse(FamilyId::C, &s)
}

pub fn encode_base4(e: &Expr) -> Result<String> {
    check(e, true, "circle or marked")?;
    encode_base4_str(&e.to_string())
}

/// Encodes a well-formed string of parentheses and brackets as written.
pub fn encode_base4_str(s: &str) -> Result<String> {
    map_tokens(s, |c| match c {
        ')' => Some('0'),
        '(' => Some('1'),
        ']' => Some('2'),
        '[' => Some('3'),
        _ => None,
    })
}

/// Inverse of [`encode_base4`]; any number of marked circles is accepted.
pub fn decode_base4(digits: &str) -> Result<Expr> {
    let s = digits
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(')'),
            '1' => Ok('('),
            '2' => Ok(']'),
            '3' => Ok('['),
            _ => Err(Error::Parse {
                pos: i,
                msg: format!("not a base-4 digit: {c:?}"),
            }),
        })
        .collect::<Result<String>>()?;
    parse_marked(&s)
}
