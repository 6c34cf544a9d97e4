//! Non-intersecting families: ordered parenthesizations, nested circles and
//! nested objects of `k` shapes.
use crate::error::Result;
use crate::family::FamilyId;
use crate::scalar::Coeff;
use crate::series::{euler_transform, IntSequence, TruncSeries};
use crate::triangle::{multiset_cell, Triangle};

/// Catalan triangle: well-formed parenthesizations by number of factors.
///
/// Column 1 wraps any expression with one pair less; column `f` is the
/// `f`-fold convolution of column 1 over ordered compositions.
pub fn catalan_triangle<T: Coeff>(max_n: usize) -> Triangle<T> {
    let mut t = Triangle::start(FamilyId::P, T::one());
    for n in 1..=max_n {
        let mut row = vec![t.row_total(n - 1)];
        for f in 2..=n {
            // first factor takes m pairs, the rest is an (f-1)-factor word
            let v = (1..n).fold(T::zero(), |acc, m| {
                acc + t.cell(m, 1) * t.cell(n - m, f - 1)
            });
            row.push(v);
        }
        t.push_row(row);
    }
    t
}

/// Nested circles, counted by factor number.
pub fn c_triangle<T: Coeff>(max_n: usize) -> Triangle<T> {
    kc_triangle(1, max_n).with_family(FamilyId::C)
}

/// Nested objects of `k` distinct hollow shapes. Column 1 is `k` times the
/// previous total; wider columns are multisets of single-factor objects.
pub fn kc_triangle<T: Coeff>(k: u32, max_n: usize) -> Triangle<T> {
    let mut t = Triangle::start(FamilyId::KC(k), T::one());
    let k = T::from_u32(k).expect("k fits");
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        col1.push(k.clone() * t.row_total(n - 1));
        let row = (1..=n)
            .map(|f| {
                if f == 1 {
                    col1[n].clone()
                } else {
                    multiset_cell(&col1, n, f)
                }
            })
            .collect();
        t.push_row(row);
    }
    t
}

/// `C(z)` as the fixed point `C = Euler(z C)`, solved one degree at a time.
pub fn c_series_via_euler<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    let mut c = vec![T::one()];
    let mut shifted = vec![T::zero()];
    for n in 1..=max_n {
        shifted.push(c[n - 1].clone());
        let e = euler_transform(&IntSequence::new(shifted.clone()), n)?;
        c.push(e.coeff(n));
    }
    Ok(TruncSeries::from_coeffs(c, max_n))
}

/// Limit values of `|C_N^(N-i)|` for `i = 0..=max_i`: the Euler transform of
/// the nested-circle totals.
pub fn envelope<T: Coeff>(max_i: usize) -> Result<IntSequence<T>> {
    let mut v = c_series_via_euler::<T>(max_i)?.into_coeffs();
    v[0] = T::zero();
    Ok(euler_transform(&IntSequence::new(v), max_i)?.into())
}

/// Euler transform of `k * |kC_{N-1}|`, the generating-function route to the
/// `k`-shape totals.
pub fn kc_totals_via_euler<T: Coeff>(k: u32, max_n: usize) -> Result<TruncSeries<T>> {
    let k = T::from_u32(k).expect("k fits");
    let mut c = vec![T::one()];
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        col1.push(k.clone() * &c[n - 1]);
        let e = euler_transform(&IntSequence::new(col1.clone()), n)?;
        c.push(e.coeff(n));
    }
    Ok(TruncSeries::from_coeffs(c, max_n))
}
