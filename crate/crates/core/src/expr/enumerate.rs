//! Exhaustive generation of canonical expressions, one family at a time.
//!
//! Trees are built by weight (circle count) from forests of smaller weight,
//! and forests are multisets of trees taken in a fixed order, so every
//! topology appears exactly once without deduplication. Families with
//! exactly one special object (a marked circle, a single pair) add a
//! second layer: a special tree is the object itself or a plain circle
//! around a special forest.
use super::{Expr, Node, TripleKind};
use crate::error::{Error, Result};
use crate::family::FamilyId;

/// All canonical expressions of one family with `n` circles.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub family: FamilyId,
    pub n: usize,
    /// Sorted by the canonical order.
    pub exprs: Vec<Expr>,
    /// `histogram[f]` is the number of expressions with `f` factors.
    pub histogram: Vec<u64>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.exprs.len()
    }
}

/// Largest `N` accepted by [`enumerate_family`].
pub fn enumeration_limit(family: FamilyId) -> Result<usize> {
    match family {
        FamilyId::C => Ok(10),
        FamilyId::M | FamilyId::Mv | FamilyId::X | FamilyId::Xt | FamilyId::X2 => Ok(8),
        FamilyId::X3 => Ok(7),
        FamilyId::P | FamilyId::KC(_) => Err(Error::UnsupportedFamily(family)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Base {
    Circles,
    Pairs,
    Triples,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Special {
    Marked,
    VoidMarked,
    Pair,
    TouchingPair,
}

struct Layer {
    /// `trees[w]`: single-factor objects with `w` circles.
    trees: Vec<Vec<Node>>,
    /// `forests[w]`: multisets of trees with total weight `w`.
    forests: Vec<Vec<Expr>>,
}

impl Layer {
    fn new() -> Self {
        Self {
            trees: vec![Vec::new()],
            forests: vec![vec![Expr::empty()]],
        }
    }
}

/// Multisets of trees with total weight `n`, chosen in non-decreasing
/// `(weight, index)` order.
fn multisets(trees: &[Vec<Node>], n: usize) -> Vec<Expr> {
    fn rec(
        trees: &[Vec<Node>],
        remaining: usize,
        from: (usize, usize),
        stack: &mut Vec<Node>,
        out: &mut Vec<Expr>,
    ) {
        if remaining == 0 {
            out.push(Expr::from_canonical(stack.clone()));
            return;
        }
        for w in from.0..=remaining.min(trees.len() - 1) {
            let start = if w == from.0 { from.1 } else { 0 };
            for i in start..trees[w].len() {
                stack.push(trees[w][i].clone());
                rec(trees, remaining - w, (w, i), stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(trees, n, (1, 0), &mut Vec::new(), &mut out);
    out
}

/// Weight compositions of `total` into `parts` nonnegative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every tuple of forests with the given weights.
fn region_tuples(forests: &[Vec<Expr>], weights: &[usize]) -> Vec<Vec<Expr>> {
    let mut acc: Vec<Vec<Expr>> = vec![Vec::new()];
    for &w in weights {
        let mut next = Vec::with_capacity(acc.len() * forests[w].len());
        for prefix in &acc {
            for f in &forests[w] {
                let mut v = prefix.clone();
                v.push(f.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn pairs(forests: &[Vec<Expr>], w: usize, touching: bool, out: &mut Vec<Node>) {
    if w < 2 {
        return;
    }
    for weights in compositions(w - 2, 3) {
        if touching && weights[1] != 0 {
            continue;
        }
        for r in region_tuples(forests, &weights) {
            if r[0] <= r[2] {
                let [reg3, reg2, reg1]: [Expr; 3] = r.try_into().expect("three regions");
                out.push(Node::Pair { reg3, reg2, reg1 });
            }
        }
    }
}

fn base_trees(base: Base, plain: &Layer, w: usize) -> Vec<Node> {
    let mut out: Vec<Node> = plain.forests[w - 1]
        .iter()
        .cloned()
        .map(Node::Circle)
        .collect();
    if base != Base::Circles {
        pairs(&plain.forests, w, false, &mut out);
    }
    if base == Base::Triples && w >= 3 {
        for kind in TripleKind::ALL {
            for weights in compositions(w - 3, kind.region_count()) {
                for regions in region_tuples(&plain.forests, &weights) {
                    if kind.is_canonical(&regions) {
                        out.push(Node::Triple { kind, regions });
                    }
                }
            }
        }
    }
    out
}

fn special_trees(special: Special, plain: &Layer, marked: &Layer, w: usize) -> Vec<Node> {
    let mut out: Vec<Node> = marked.forests[w - 1]
        .iter()
        .cloned()
        .map(Node::Circle)
        .collect();
    match special {
        Special::Marked => out.extend(plain.forests[w - 1].iter().cloned().map(Node::Marked)),
        Special::VoidMarked if w == 1 => out.push(Node::Marked(Expr::empty())),
        Special::VoidMarked => {}
        Special::Pair => pairs(&plain.forests, w, false, &mut out),
        Special::TouchingPair => pairs(&plain.forests, w, true, &mut out),
    }
    out
}

/// One special tree plus a plain forest.
fn special_forests(plain: &Layer, marked: &Layer, n: usize) -> Vec<Expr> {
    let mut out = Vec::new();
    for w in 1..=n {
        for s in &marked.trees[w] {
            for rest in &plain.forests[n - w] {
                let mut nodes = rest.factors().to_vec();
                nodes.push(s.clone());
                out.push(Expr::from_canonical(nodes));
            }
        }
    }
    out
}

/// Enumerates every canonical member of `family` with `n` circles.
pub fn enumerate_family(family: FamilyId, n: usize) -> Result<Enumeration> {
    let limit = enumeration_limit(family)?;
    if n > limit {
        return Err(Error::BudgetExceeded { family, n, limit });
    }
    let (base, special) = match family {
        FamilyId::C => (Base::Circles, None),
        FamilyId::M => (Base::Circles, Some(Special::Marked)),
        FamilyId::Mv => (Base::Circles, Some(Special::VoidMarked)),
        FamilyId::X => (Base::Circles, Some(Special::Pair)),
        FamilyId::Xt => (Base::Circles, Some(Special::TouchingPair)),
        FamilyId::X2 => (Base::Pairs, None),
        FamilyId::X3 => (Base::Triples, None),
        FamilyId::P | FamilyId::KC(_) => unreachable!("refused by enumeration_limit"),
    };
    let mut plain = Layer::new();
    let mut marked = Layer::new();
    marked.forests[0].clear();
    for w in 1..=n {
        let t = base_trees(base, &plain, w);
        plain.trees.push(t);
        plain.forests.push(multisets(&plain.trees, w));
        if let Some(sp) = special {
            let t = special_trees(sp, &plain, &marked, w);
            marked.trees.push(t);
            marked.forests.push(special_forests(&plain, &marked, w));
        }
    }
    let mut exprs = match special {
        None => plain.forests.swap_remove(n),
        Some(_) => marked.forests.swap_remove(n),
    };
    exprs.sort();
    let mut histogram = vec![0u64; n + 1];
    for e in &exprs {
        histogram[e.factor_count()] += 1;
    }
    Ok(Enumeration {
        family,
        n,
        exprs,
        histogram,
    })
}
