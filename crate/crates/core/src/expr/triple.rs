//! The six topologies of three mutually intersecting circles.
use super::Expr;

/// Triple-intersection kinds, numbered 1 to 6 in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleKind {
    /// Three pairwise-intersecting circles with a common center region.
    Rgb,
    /// As `Rgb` but the center is uncovered.
    Torn,
    /// Linear chain: the outer two circles do not meet.
    Chain,
    /// Chain compressed until the outer two meet inside the middle one,
    /// which splits into an upper and a lower piece.
    Compressed,
    /// Outer two meet; a small middle circle splits their lens.
    Shrunk,
    /// Two circles meet; a third inside one of them crosses the other.
    Asymmetric,
}

impl TripleKind {
    pub const ALL: [TripleKind; 6] = [
        TripleKind::Rgb,
        TripleKind::Torn,
        TripleKind::Chain,
        TripleKind::Compressed,
        TripleKind::Shrunk,
        TripleKind::Asymmetric,
    ];

    pub fn digit(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_digit(d: u8) -> Option<Self> {
        Self::ALL.get(usize::from(d).checked_sub(1)?).copied()
    }

    /// Region labels (covering circles) in serialization order.
    pub fn region_names(self) -> &'static [&'static str] {
        match self {
            TripleKind::Rgb => &["123", "1", "12", "2", "23", "3", "13"],
            TripleKind::Torn => &["hole", "1", "12", "2", "23", "3", "13"],
            TripleKind::Chain => &["1", "12", "2", "23", "3"],
            TripleKind::Compressed => &["123", "1", "12", "23", "3", "2up", "2down"],
            TripleKind::Shrunk => &["123", "1", "12", "23", "3", "13up", "13down"],
            TripleKind::Asymmetric => &["1", "12", "123", "23", "2"],
        }
    }

    pub fn region_count(self) -> usize {
        self.region_names().len()
    }

    /// The symmetry group as region permutations; image `g` maps a region
    /// tuple `r` to `i -> r[g[i]]`.
    pub fn symmetry(self) -> Vec<Vec<usize>> {
        match self {
            TripleKind::Rgb | TripleKind::Torn => {
                // outer regions 1..=6 in cyclic order; rotations and mirrors
                let mut g = Vec::new();
                for k in 0..3 {
                    let rot = |i: usize| (i + 2 * k) % 6;
                    let refl = |i: usize| (2 * k + 6 - i) % 6;
                    for map in [&rot as &dyn Fn(usize) -> usize, &refl] {
                        let mut p = vec![0];
                        p.extend((0..6).map(|i| map(i) + 1));
                        g.push(p);
                    }
                }
                g
            }
            TripleKind::Chain => vec![vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]],
            TripleKind::Compressed | TripleKind::Shrunk => vec![
                vec![0, 1, 2, 3, 4, 5, 6],
                vec![0, 4, 3, 2, 1, 5, 6],
                vec![0, 1, 2, 3, 4, 6, 5],
                vec![0, 4, 3, 2, 1, 6, 5],
            ],
            TripleKind::Asymmetric => vec![vec![0, 1, 2, 3, 4]],
        }
    }

    pub(crate) fn canonical_regions(self, regions: &[Expr]) -> Vec<Expr> {
        self.symmetry()
            .iter()
            .map(|g| g.iter().map(|&i| regions[i].clone()).collect::<Vec<_>>())
            .min()
            .expect("group is nonempty")
    }

    /// True iff `regions` is already the smallest image.
    pub(crate) fn is_canonical(self, regions: &[Expr]) -> bool {
        self.symmetry()
            .iter()
            .all(|g| g.iter().map(|&i| &regions[i]).ge(regions.iter()))
    }
}
