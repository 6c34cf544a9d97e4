//! Concrete circle arrangements as canonical trees.
//!
//! An [`Expr`] is an unordered forest stored sorted by the derived `Ord`
//! (node kind first, then contents), so structural equality is topological
//! equality. Every `Expr` value is canonical by construction.
//!
//! ASCII form: `(..)` is a circle, `[..]` a marked circle, and
//! `[a[b]c]` an intersecting pair with crescents `a`, `c` and lens `b`.
//! Triple intersections are written `<k|r0|r1|...|k>` with the kind digit
//! `k` and the regions in the order given by [`TripleKind::region_names`];
//! this triple syntax is specific to this crate.
mod codec;
mod enumerate;
mod flip;
mod parse;
mod triple;

use std::fmt;

use crate::error::{Error, Result};
use crate::family::FamilyId;

pub use codec::{
    decode_base4, decode_binary, encode_base4, encode_base4_str, encode_binary, encode_binary_str,
    BinaryCode,
};
pub use enumerate::{enumerate_family, enumeration_limit, Enumeration};
pub use flip::{flip, flip_clusters};
pub use parse::{parse, validate};
pub use triple::TripleKind;

/// One outermost object of a forest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Circle(Expr),
    Marked(Expr),
    /// Two intersecting circles; the outside regions belong to the
    /// surrounding forest.
    Pair {
        reg3: Expr,
        reg2: Expr,
        reg1: Expr,
    },
    Triple {
        kind: TripleKind,
        regions: Vec<Expr>,
    },
}

/// A canonical forest.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expr {
    factors: Vec<Node>,
}

impl Node {
    pub fn circle(children: Expr) -> Self {
        Node::Circle(children)
    }

    pub fn marked(children: Expr) -> Self {
        Node::Marked(children)
    }

    /// Orders the crescents so that `reg3 <= reg1`.
    pub fn pair(reg3: Expr, reg2: Expr, reg1: Expr) -> Self {
        let (reg3, reg1) = if reg3 <= reg1 {
            (reg3, reg1)
        } else {
            (reg1, reg3)
        };
        Node::Pair { reg3, reg2, reg1 }
    }

    /// Picks the smallest image of `regions` under the kind's symmetry group.
    pub fn triple(kind: TripleKind, regions: Vec<Expr>) -> Result<Self> {
        if regions.len() != kind.region_count() {
            return Err(Error::InvalidArgument(format!(
                "triple kind {} has {} regions, got {}",
                kind.digit(),
                kind.region_count(),
                regions.len()
            )));
        }
        Ok(Node::Triple {
            regions: kind.canonical_regions(&regions),
            kind,
        })
    }

    /// Re-establishes the node-level canonical form. Contained forests are
    /// already canonical.
    fn canonical(self) -> Result<Self> {
        match self {
            Node::Pair { reg3, reg2, reg1 } => Ok(Node::pair(reg3, reg2, reg1)),
            Node::Triple { kind, regions } => Node::triple(kind, regions),
            other => Ok(other),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Node::Circle(_) => "circle",
            Node::Marked(_) => "marked",
            Node::Pair { .. } => "pair",
            Node::Triple { .. } => "triple",
        }
    }

    pub fn circle_count(&self) -> usize {
        match self {
            Node::Circle(e) | Node::Marked(e) => 1 + e.circle_count(),
            Node::Pair { reg3, reg2, reg1 } => {
                2 + reg3.circle_count() + reg2.circle_count() + reg1.circle_count()
            }
            Node::Triple { regions, .. } => {
                3 + regions.iter().map(Expr::circle_count).sum::<usize>()
            }
        }
    }

    fn children(&self) -> Vec<&Expr> {
        match self {
            Node::Circle(e) | Node::Marked(e) => vec![e],
            Node::Pair { reg3, reg2, reg1 } => vec![reg3, reg2, reg1],
            Node::Triple { regions, .. } => regions.iter().collect(),
        }
    }
}

impl Expr {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes a raw forest: node symmetries first, then factor order.
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        let factors = nodes
            .into_iter()
            .map(Node::canonical)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_canonical(factors))
    }

    /// Nodes already in canonical form; only the factor order is fixed.
    pub(crate) fn from_canonical(mut factors: Vec<Node>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn factors(&self) -> &[Node] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn circle_count(&self) -> usize {
        self.factors.iter().map(Node::circle_count).sum()
    }

    /// Returns the canonical form of `self`. Every `Expr` is already
    /// canonical, so this is the identity; it exists for symmetry with
    /// [`Expr::new`] and for tests of idempotence.
    pub fn canonicalize(&self) -> Expr {
        Expr::new(self.factors.clone()).expect("canonical nodes are valid")
    }

    /// True iff the expression belongs to `family`. `P` and `kC` have no
    /// tree model here.
    pub fn is_member(&self, family: FamilyId) -> Result<bool> {
        let mut census = Census::default();
        census.visit(self);
        Ok(match family {
            FamilyId::C => census.marked == 0 && census.pairs == 0 && census.triples == 0,
            FamilyId::M | FamilyId::Mv => {
                census.marked == 1
                    && census.pairs == 0
                    && census.triples == 0
                    && (family == FamilyId::M || census.void_marked == 1)
            }
            FamilyId::X | FamilyId::Xt => {
                census.marked == 0
                    && census.pairs == 1
                    && census.triples == 0
                    && (family == FamilyId::X || census.touching == 1)
            }
            FamilyId::X2 => census.marked == 0 && census.triples == 0,
            FamilyId::X3 => census.marked == 0,
            FamilyId::P | FamilyId::KC(_) => return Err(Error::UnsupportedFamily(family)),
        })
    }
}

#[derive(Default)]
struct Census {
    marked: usize,
    void_marked: usize,
    pairs: usize,
    touching: usize,
    triples: usize,
}

impl Census {
    fn visit(&mut self, e: &Expr) {
        for n in e.factors() {
            match n {
                Node::Marked(c) => {
                    self.marked += 1;
                    self.void_marked += usize::from(c.is_empty());
                }
                Node::Pair { reg2, .. } => {
                    self.pairs += 1;
                    self.touching += usize::from(reg2.is_empty());
                }
                Node::Triple { .. } => self.triples += 1,
                Node::Circle(_) => {}
            }
            for c in n.children() {
                self.visit(c);
            }
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Circle(e) => write!(f, "({e})"),
            Node::Marked(e) => write!(f, "[{e}]"),
            Node::Pair { reg3, reg2, reg1 } => write!(f, "[{reg3}[{reg2}]{reg1}]"),
            Node::Triple { kind, regions } => {
                let k = kind.digit();
                write!(f, "<{k}")?;
                for r in regions {
                    write!(f, "|{r}")?;
                }
                write!(f, "|{k}>")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.factors.iter().try_for_each(|n| write!(f, "{n}"))
    }
}
