use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The counting families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Ordered parenthesizations (Catalan triangle).
    P,
    /// Nested non-intersecting circles.
    C,
    /// Nested non-intersecting objects drawn from `k` distinct shapes.
    KC(u32),
    /// One marked circle.
    M,
    /// One marked circle that contains nothing.
    Mv,
    /// Exactly one intersecting pair.
    X,
    /// Exactly one touching pair.
    Xt,
    /// Any number of pairs, each circle meeting at most one other.
    X2,
    /// Pairs and triple intersections.
    X3,
}

impl FamilyId {
    /// Families with a brute-force enumeration oracle.
    pub const ENUMERABLE: [FamilyId; 7] = [
        FamilyId::C,
        FamilyId::M,
        FamilyId::Mv,
        FamilyId::X,
        FamilyId::Xt,
        FamilyId::X2,
        FamilyId::X3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P => "P",
            FamilyId::C => "C",
            FamilyId::KC(_) => "kC",
            FamilyId::M => "M",
            FamilyId::Mv => "Mv",
            FamilyId::X => "X",
            FamilyId::Xt => "Xt",
            FamilyId::X2 => "X2",
            FamilyId::X3 => "X3",
        }
    }

    /// First index at which the family's table is defined.
    pub fn first_index(self) -> usize {
        match self {
            FamilyId::X => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::KC(k) => write!(f, "kC(k={k})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts the plain names; `kC` parses with `k = 1` and callers
    /// substitute the real `k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "P" => FamilyId::P,
            "C" => FamilyId::C,
            "kC" | "KC" => FamilyId::KC(1),
            "M" => FamilyId::M,
            "Mv" => FamilyId::Mv,
            "X" => FamilyId::X,
            "Xt" => FamilyId::Xt,
            "X2" => FamilyId::X2,
            "X3" => FamilyId::X3,
            _ => return Err(Error::InvalidArgument(format!("unknown family '{s}'"))),
        })
    }
}
