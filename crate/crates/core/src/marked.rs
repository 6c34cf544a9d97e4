//! Circle sets with one marked circle, with and without contents inside the
//! marked one.
use crate::error::Result;
use crate::family::FamilyId;
use crate::nested::c_triangle;
use crate::scalar::Coeff;
use crate::series::TruncSeries;
use crate::triangle::{pivot_cell, Triangle};

/// One marked circle anywhere.
///
/// A single-factor object either brackets a plain circle set or wraps a
/// marked set in a plain circle. The empty set holds no marked circle, so the
/// wrapping branch contributes nothing at `N = 1` even though the table
/// reports `|M_0| = 1`.
pub fn m_triangle<T: Coeff>(max_n: usize) -> Triangle<T> {
    let c = c_triangle::<T>(max_n);
    let mut t = Triangle::start(FamilyId::M, T::one());
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        let wrapped = if n == 1 {
            T::zero()
        } else {
            t.row_total(n - 1)
        };
        col1.push(c.row_total(n - 1) + wrapped);
        let row = (1..=n)
            .map(|f| match f {
                1 => col1[n].clone(),
                _ => pivot_cell(&col1, &c, n, f),
            })
            .collect();
        t.push_row(row);
    }
    t
}

/// One marked circle that contains no other circle.
pub fn mv_triangle<T: Coeff>(max_n: usize) -> Triangle<T> {
    let c = c_triangle::<T>(max_n);
    let mut t = Triangle::start(FamilyId::Mv, T::one());
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        col1.push(t.row_total(n - 1));
        let row = (1..=n)
            .map(|f| match f {
                1 => col1[n].clone(),
                _ => pivot_cell(&col1, &c, n, f),
            })
            .collect();
        t.push_row(row);
    }
    t
}

/// `M(z) = 1 + z C(z)^2 / (1 - z C(z))` with the inverse expanded as a
/// geometric sum; `z C` has valuation 1 so `max_n + 1` terms suffice.
pub fn m_series_identity<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    let c = TruncSeries::from_coeffs(c_triangle::<T>(max_n).totals().values().to_vec(), max_n);
    let zc = c.shift(1);
    let inv = geometric_inverse(&zc)?;
    let num = c.mul(&c)?.shift(1);
    TruncSeries::one(max_n).add(&num.mul(&inv)?)
}

/// `1 / (1 - g)` for a series with zero constant term.
pub(crate) fn geometric_inverse<T: Coeff>(g: &TruncSeries<T>) -> Result<TruncSeries<T>> {
    debug_assert!(g.coeff(0).is_zero());
    let mut acc = TruncSeries::one(g.order());
    let mut power = TruncSeries::one(g.order());
    for _ in 0..g.order() {
        power = power.mul(g)?;
        acc = acc.add(&power)?;
    }
    Ok(acc)
}
