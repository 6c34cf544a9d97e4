//! Count tables indexed by circle count `N` and factor count `f`.
use crate::family::FamilyId;
use crate::partition::{multiset_binomial, partitions_of};
use crate::scalar::Coeff;
use crate::series::IntSequence;

/// `cell(N, f)` for `1 <= f <= N <= max_n`, with row totals from `N = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<T> {
    family: FamilyId,
    rows: Vec<Vec<T>>,
    totals: Vec<T>,
}

impl<T: Coeff> Triangle<T> {
    /// Starts an empty table holding only the `N = 0` total.
    pub(crate) fn start(family: FamilyId, total0: T) -> Self {
        Self {
            family,
            rows: vec![vec![]],
            totals: vec![total0],
        }
    }

    /// Appends row `N = max_n + 1`; the total is the sum of the cells.
    pub(crate) fn push_row(&mut self, cells: Vec<T>) {
        debug_assert_eq!(cells.len(), self.rows.len());
        let total = cells.iter().fold(T::zero(), |acc, c| acc + c);
        self.rows.push(cells);
        self.totals.push(total);
    }

    pub(crate) fn with_family(mut self, family: FamilyId) -> Self {
        self.family = family;
        self
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `cell(n, f)`; zero outside `1 <= f <= n`.
    pub fn cell(&self, n: usize, f: usize) -> T {
        if f == 0 || f > n || n > self.max_n() {
            return T::zero();
        }
        self.rows[n][f - 1].clone()
    }

    /// Cells `f = 1..=n` of row `n`.
    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn row_total(&self, n: usize) -> T {
        self.totals[n].clone()
    }

    /// Row totals `N = 0..=max_n`.
    pub fn totals(&self) -> IntSequence<T> {
        IntSequence::new(self.totals.clone())
    }

    /// The `f = 1` column as a sequence indexed by `N` (index 0 is zero).
    pub fn column1(&self) -> IntSequence<T> {
        (0..=self.max_n()).map(|n| self.cell(n, 1)).collect()
    }
}

/// Forests of `f >= 2` unordered factors drawn from single-factor objects
/// counted by `col1`: the sum over partitions of `n` into `f` parts of
/// `prod_j binom(col1[N_j] + c_j - 1, c_j)`.
pub(crate) fn multiset_cell<T: Coeff>(col1: &[T], n: usize, f: usize) -> T {
    let mut acc = T::zero();
    for p in partitions_of(n, Some(f)) {
        let mut term = T::one();
        for &(size, mult) in p.parts() {
            term *= multiset_binomial(&col1[size], mult);
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    acc
}

/// One distinguished factor counted by `col1`, the other `f - 1` factors
/// drawn from the plain circle table: `sum_{n'} col1[n'] * c.cell(n - n', f - 1)`.
pub(crate) fn pivot_cell<T: Coeff>(col1: &[T], c: &Triangle<T>, n: usize, f: usize) -> T {
    let mut acc = T::zero();
    for (head, h) in col1.iter().enumerate().take(n).skip(1) {
        let rest = c.cell(n - head, f - 1);
        if !rest.is_zero() && !h.is_zero() {
            acc += h.clone() * rest;
        }
    }
    acc
}

impl<T: Coeff> Triangle<T> {
    /// The recurrence table of any family up to `max_n`.
    pub fn compute(family: FamilyId, max_n: usize) -> crate::Result<Self> {
        use crate::{intersect, marked, nested};
        Ok(match family {
            FamilyId::P => nested::catalan_triangle(max_n),
            FamilyId::C => nested::c_triangle(max_n),
            FamilyId::KC(k) => nested::kc_triangle(k, max_n),
            FamilyId::M => marked::m_triangle(max_n),
            FamilyId::Mv => marked::mv_triangle(max_n),
            FamilyId::X => intersect::x_triangle(max_n)?,
            FamilyId::Xt => intersect::xt_triangle(max_n)?,
            FamilyId::X2 => intersect::x2_triangle(max_n)?,
            FamilyId::X3 => intersect::x3_triangle(max_n)?,
        })
    }
}
