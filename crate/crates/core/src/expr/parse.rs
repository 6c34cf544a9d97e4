//! Reading the ASCII form. Brackets mean a marked circle in the `M`
//! families and an intersecting pair in the `X` families; pair strings are
//! resolved by trying every top-level bracket as the inner circle.
use std::collections::BTreeSet;

use super::{Expr, Node, TripleKind};
use crate::error::{Error, Result};
use crate::family::FamilyId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    BOpen,
    BClose,
    TOpen(u8),
    Sep,
    TClose(u8),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digit = |j: usize| b.get(j).filter(|c| c.is_ascii_digit()).map(|c| c - b'0');
    while i < b.len() {
        let (tok, len) = match b[i] {
            b'(' => (Tok::Open, 1),
            b')' => (Tok::Close, 1),
            b'[' => (Tok::BOpen, 1),
            b']' => (Tok::BClose, 1),
            b'<' => match (digit(i + 1), b.get(i + 2)) {
                (Some(k), Some(b'|')) => (Tok::TOpen(k), 3),
                _ => return Err(parse_err(i, "expected '<k|'")),
            },
            b'|' => match (digit(i + 1), b.get(i + 2)) {
                (Some(k), Some(b'>')) => (Tok::TClose(k), 3),
                _ => (Tok::Sep, 1),
            },
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            c => {
                return Err(parse_err(
                    i,
                    &format!("unexpected character {:?}", c as char),
                ))
            }
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

fn parse_err(pos: usize, msg: &str) -> Error {
    Error::Parse {
        pos,
        msg: msg.to_string(),
    }
}

/// Bracket structure before the family decides what brackets mean.
#[derive(Debug)]
enum Raw {
    Paren(Vec<Raw>),
    Bracket(Vec<Raw>),
    Triple(TripleKind, Vec<Vec<Raw>>),
}

enum Frame {
    Paren(usize),
    Bracket(usize),
    Triple(usize, u8, Vec<Vec<Raw>>),
}

fn build(toks: &[(usize, Tok)]) -> Result<Vec<Raw>> {
    let mut stack: Vec<(Frame, Vec<Raw>)> = Vec::new();
    let mut cur: Vec<Raw> = Vec::new();
    for &(pos, tok) in toks {
        match tok {
            Tok::Open => stack.push((Frame::Paren(pos), std::mem::take(&mut cur))),
            Tok::BOpen => stack.push((Frame::Bracket(pos), std::mem::take(&mut cur))),
            Tok::TOpen(k) => {
                stack.push((Frame::Triple(pos, k, Vec::new()), std::mem::take(&mut cur)))
            }
            Tok::Close | Tok::BClose => {
                let (frame, mut outer) = stack
                    .pop()
                    .ok_or_else(|| parse_err(pos, "unmatched close"))?;
                let node = match (frame, tok) {
                    (Frame::Paren(_), Tok::Close) => Raw::Paren(cur),
                    (Frame::Bracket(_), Tok::BClose) => Raw::Bracket(cur),
                    _ => return Err(parse_err(pos, "mismatched close")),
                };
                outer.push(node);
                cur = outer;
            }
            Tok::Sep => match stack.last_mut() {
                Some((Frame::Triple(_, _, regions), _)) => regions.push(std::mem::take(&mut cur)),
                _ => return Err(parse_err(pos, "'|' outside a triple")),
            },
            Tok::TClose(k) => {
                let (frame, mut outer) = stack
                    .pop()
                    .ok_or_else(|| parse_err(pos, "unmatched close"))?;
                let Frame::Triple(_, open_k, mut regions) = frame else {
                    return Err(parse_err(pos, "mismatched close"));
                };
                if open_k != k {
                    return Err(parse_err(pos, "triple kind digits differ"));
                }
                let kind = TripleKind::from_digit(k)
                    .ok_or_else(|| parse_err(pos, "unknown triple kind"))?;
                regions.push(std::mem::take(&mut cur));
                if regions.len() != kind.region_count() {
                    return Err(parse_err(
                        pos,
                        &format!("triple kind {k} needs {} regions", kind.region_count()),
                    ));
                }
                outer.push(Raw::Triple(kind, regions));
                cur = outer;
            }
        }
    }
    match stack.last() {
        None => Ok(cur),
        Some((Frame::Paren(p) | Frame::Bracket(p) | Frame::Triple(p, _, _), _)) => {
            Err(parse_err(*p, "unclosed group"))
        }
    }
}

/// True iff `s` is a well-formed string: every group closes with its own
/// kind and no prefix closes more than it opened.
pub fn validate(s: &str) -> bool {
    tokenize(s).and_then(|t| build(&t)).is_ok()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Brackets {
    Forbidden,
    Marked,
    Pair,
}

struct Reader {
    brackets: Brackets,
    triples: bool,
}

impl Reader {
    /// All readings of a forest.
    fn forest(&self, items: &[Raw]) -> std::result::Result<BTreeSet<Expr>, String> {
        let mut acc: BTreeSet<Vec<Node>> = BTreeSet::from([Vec::new()]);
        for item in items {
            let options = self.node(item)?;
            let mut next = BTreeSet::new();
            for prefix in &acc {
                for n in &options {
                    let mut v = prefix.clone();
                    v.push(n.clone());
                    v.sort();
                    next.insert(v);
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().map(Expr::from_canonical).collect())
    }

    fn node(&self, item: &Raw) -> std::result::Result<BTreeSet<Node>, String> {
        Ok(match item {
            Raw::Paren(c) => self.forest(c)?.into_iter().map(Node::Circle).collect(),
            Raw::Bracket(c) => match self.brackets {
                Brackets::Forbidden => return Err("brackets are not allowed here".into()),
                Brackets::Marked => self.forest(c)?.into_iter().map(Node::Marked).collect(),
                Brackets::Pair => self.pair(c)?,
            },
            Raw::Triple(kind, regions) => {
                if !self.triples {
                    return Err("triples are not allowed here".into());
                }
                let mut acc: Vec<Vec<Expr>> = vec![Vec::new()];
                for r in regions {
                    let options = self.forest(r)?;
                    acc = acc
                        .iter()
                        .flat_map(|p| {
                            options.iter().map(move |o| {
                                let mut v = p.clone();
                                v.push(o.clone());
                                v
                            })
                        })
                        .collect();
                }
                acc.into_iter()
                    .map(|r| Node::triple(*kind, r).expect("region count checked"))
                    .collect()
            }
        })
    }

    /// `[a[b]c]`: any top-level bracket may be the inner circle.
    fn pair(&self, items: &[Raw]) -> std::result::Result<BTreeSet<Node>, String> {
        let mut out = BTreeSet::new();
        let mut last_err = "a pair needs an inner bracket".to_string();
        for (j, item) in items.iter().enumerate() {
            let Raw::Bracket(lens) = item else { continue };
            let parts = (
                self.forest(&items[..j]),
                self.forest(lens),
                self.forest(&items[j + 1..]),
            );
            match parts {
                (Ok(a), Ok(b), Ok(c)) => {
                    for x in &a {
                        for y in &b {
                            for z in &c {
                                out.insert(Node::pair(x.clone(), y.clone(), z.clone()));
                            }
                        }
                    }
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => last_err = e,
            }
        }
        if out.is_empty() {
            Err(last_err)
        } else {
            Ok(out)
        }
    }
}

fn read(s: &str, reader: Reader) -> Result<Expr> {
    let toks = tokenize(s)?;
    let raw = build(&toks)?;
    let mut readings = reader
        .forest(&raw)
        .map_err(|m| parse_err(0, &m))?
        .into_iter();
    let first = readings.next().ok_or_else(|| parse_err(0, "no reading"))?;
    if readings.next().is_some() {
        return Err(parse_err(0, "ambiguous pair structure"));
    }
    Ok(first)
}

/// Parses `s` as a member of `family` and canonicalizes it.
pub fn parse(family: FamilyId, s: &str) -> Result<Expr> {
    let reader = match family {
        FamilyId::C => Reader {
            brackets: Brackets::Forbidden,
            triples: false,
        },
        FamilyId::M | FamilyId::Mv => Reader {
            brackets: Brackets::Marked,
            triples: false,
        },
        FamilyId::X | FamilyId::Xt | FamilyId::X2 => Reader {
            brackets: Brackets::Pair,
            triples: false,
        },
        FamilyId::X3 => Reader {
            brackets: Brackets::Pair,
            triples: true,
        },
        FamilyId::P | FamilyId::KC(_) => return Err(Error::UnsupportedFamily(family)),
    };
    let e = read(s, reader)?;
    if !e.is_member(family)? {
        return Err(parse_err(0, &format!("not a member of {family}")));
    }
    Ok(e)
}

/// Circles and any number of marked circles.
pub(crate) fn parse_marked(s: &str) -> Result<Expr> {
    read(
        s,
        Reader {
            brackets: Brackets::Marked,
            triples: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(validate("(()())()"));
        assert!(validate(""));
        assert!(validate("([[]])"));
        assert!(validate("<3|()||[]|||3>"));
        assert!(!validate(")("));
        assert!(!validate("([)]"));
        assert!(!validate("(()"));
        assert!(!validate("(x)"));
        assert!(!validate("<3|||3>"));
        assert!(!validate("<1||||||||2>"));
    }

    #[test]
    fn errors_name_a_position() {
        match parse(FamilyId::C, "(()))") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn family_context() {
        assert!(parse(FamilyId::C, "[]").is_err());
        assert!(parse(FamilyId::M, "()").is_err());
        assert!(parse(FamilyId::M, "[][]").is_err());
        assert!(parse(FamilyId::Mv, "[()]").is_err());
        assert!(parse(FamilyId::X, "[]").is_err());
        assert!(parse(FamilyId::X, "[[]][[]]").is_err());
        assert!(parse(FamilyId::X2, "[[]][[]]").is_ok());
        assert!(parse(FamilyId::Xt, "[[()]]").is_err());
        assert!(parse(FamilyId::X2, "<6||||||6>").is_err());
        assert!(parse(FamilyId::X3, "<6||||||6>").is_ok());
        assert!(parse(FamilyId::P, "()").is_err());
    }

    #[test]
    fn pair_regions() {
        let e = parse(FamilyId::X, "[(())[()]]").unwrap();
        let Node::Pair { reg3, reg2, reg1 } = &e.factors()[0] else {
            panic!()
        };
        assert!(reg3.is_empty());
        assert_eq!(reg2.to_string(), "()");
        assert_eq!(reg1.to_string(), "(())");
    }

    #[test]
    fn triple_symmetry_is_applied() {
        let a = parse(FamilyId::X3, "<3|()|||||3>").unwrap();
        let b = parse(FamilyId::X3, "<3|||||()3>");
        assert!(b.is_err());
        let b = parse(FamilyId::X3, "<3|||||()|3>").unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "<3|||||()|3>");
    }
}
