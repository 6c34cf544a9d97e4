//! Families with intersecting circles: a single crossing pair, a single
//! touching pair, any number of disjoint pairs, and triple intersections.
//!
//! Region-filling counts (the `D` sequences) come from cycle-index
//! substitution into the family's own generating function. The recursive
//! families are solved jointly, one degree at a time: the single-factor
//! count at `N` only consults coefficients of degree `< N`.
use crate::error::Result;
use crate::family::FamilyId;
use crate::marked::geometric_inverse;
use crate::nested::c_triangle;
use crate::scalar::Coeff;
use crate::series::{pair_multiset, CycleIndex, IntSequence, TruncSeries};
use crate::triangle::{multiset_cell, pivot_cell, Triangle};

fn c_series<T: Coeff>(max_n: usize) -> (Triangle<T>, TruncSeries<T>) {
    let c = c_triangle::<T>(max_n);
    let s = TruncSeries::from_coeffs(c.totals().values().to_vec(), max_n);
    (c, s)
}

/// Unordered fillings of the two crescents of a pair with plain circle sets:
/// `(C(z)^2 + C(z^2))/2`.
pub fn d_hat_series<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    pair_multiset(&c_series::<T>(max_n).1)
}

/// Fillings of all three inner regions of a pair: `C(z) * D_hat(z)`.
pub fn d_series<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    let (_, c) = c_series::<T>(max_n);
    c.mul(&pair_multiset(&c)?)
}

/// Shared shape of the single-pair families: column 1 is the previous total
/// (an outer circle wrapped around a pair) plus `inner[N-2]` (a bare pair
/// with filled regions); the pivot factor rides with plain circles.
fn single_pair_triangle<T: Coeff>(
    family: FamilyId,
    inner: &TruncSeries<T>,
    c: &Triangle<T>,
    max_n: usize,
) -> Triangle<T> {
    let mut t = Triangle::start(family, T::zero());
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        let bare = if n >= 2 {
            inner.coeff(n - 2)
        } else {
            T::zero()
        };
        col1.push(t.row_total(n - 1) + bare);
        let row = (1..=n)
            .map(|f| match f {
                1 => col1[n].clone(),
                _ => pivot_cell(&col1, c, n, f),
            })
            .collect();
        t.push_row(row);
    }
    t
}

/// Exactly one intersecting pair; `|X_0| = |X_1| = 0`.
pub fn x_triangle<T: Coeff>(max_n: usize) -> Result<Triangle<T>> {
    let (c, _) = c_series::<T>(max_n);
    Ok(single_pair_triangle(
        FamilyId::X,
        &d_series(max_n)?,
        &c,
        max_n,
    ))
}

/// Exactly one touching pair: the lens is empty.
pub fn xt_triangle<T: Coeff>(max_n: usize) -> Result<Triangle<T>> {
    let (c, _) = c_series::<T>(max_n);
    Ok(single_pair_triangle(
        FamilyId::Xt,
        &d_hat_series(max_n)?,
        &c,
        max_n,
    ))
}

/// `1 + z^2 inner(z) C(z) / (1 - z C(z))`.
fn single_pair_identity<T: Coeff>(inner: &TruncSeries<T>, max_n: usize) -> Result<TruncSeries<T>> {
    let (_, c) = c_series::<T>(max_n);
    let inv = geometric_inverse(&c.shift(1))?;
    let body = inner.mul(&c)?.shift(2).mul(&inv)?;
    TruncSeries::one(max_n).add(&body)
}

/// `X(z) = 1 + z^2 D(z) C(z) / (1 - z C(z))`. The constant term is 1 by
/// the formula; the triangle uses 0.
pub fn x_series_identity<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    single_pair_identity(&d_series(max_n)?, max_n)
}

/// `X_t(z) = 1 + z^2 D_hat(z) C(z) / (1 - z C(z))`.
pub fn xt_series_identity<T: Coeff>(max_n: usize) -> Result<TruncSeries<T>> {
    single_pair_identity(&d_hat_series(max_n)?, max_n)
}

/// Region fillings for pairs whose regions host the pair family itself:
/// `(D_bar, D_tilde)` with `D_tilde = (X^2 + X(z^2))/2`, `D_bar = X D_tilde`.
fn pair_fillings<T: Coeff>(x: &TruncSeries<T>) -> Result<(TruncSeries<T>, TruncSeries<T>)> {
    let tilde = pair_multiset(x)?;
    Ok((x.mul(&tilde)?, tilde))
}

/// Region fillings for the triple family, all in terms of `X = X3(z)`.
#[derive(Clone, Debug)]
struct TripleFillings<T> {
    pair: TruncSeries<T>,
    rgb: TruncSeries<T>,
    chain: TruncSeries<T>,
    compressed: TruncSeries<T>,
    asymmetric: TruncSeries<T>,
}

fn triple_fillings<T: Coeff>(x: &TruncSeries<T>) -> Result<TripleFillings<T>> {
    let x2 = x.mul(x)?;
    let c2 = CycleIndex::cyclic2();
    // three crescent pairs around a filled center, permuted by S3
    let rgb = x.mul(&CycleIndex::symmetric3().substitute_powers(&x2)?)?;
    // two mirrored (crescent, lens) pairs around the middle circle
    let chain = x.mul(&c2.substitute_powers(&x2)?)?;
    // left-right mirror on (crescent, lens) pairs, up-down mirror on the
    // two pieces of the middle circle
    let compressed = x
        .mul(&c2.substitute_powers(&x2)?)?
        .mul(&c2.substitute_powers(x)?)?;
    Ok(TripleFillings {
        pair: x.mul(&pair_multiset(x)?)?,
        rgb,
        chain,
        compressed,
        asymmetric: x2.mul(&x2)?.mul(x)?,
    })
}

impl<T: Coeff> TripleFillings<T> {
    /// `D2[n-2] + 2 D31[n-3] + D33[n-3] + 2 D34[n-3] + D36[n-3]`.
    fn bare_objects(&self, n: usize) -> T {
        let mut acc = T::zero();
        if n >= 2 {
            acc += self.pair.coeff(n - 2);
        }
        if n >= 3 {
            let two = T::one() + T::one();
            acc += two.clone() * self.rgb.coeff(n - 3);
            acc += self.chain.coeff(n - 3);
            acc += two * self.compressed.coeff(n - 3);
            acc += self.asymmetric.coeff(n - 3);
        }
        acc
    }
}

/// Builds a recursive family: column 1 is the previous total plus the bare
/// compound objects of size `n`, computed from the totals known so far;
/// wider columns are multisets over column 1.
fn recursive_triangle<T: Coeff>(
    family: FamilyId,
    max_n: usize,
    bare: impl Fn(&TruncSeries<T>, usize) -> Result<T>,
) -> Result<Triangle<T>> {
    let mut t = Triangle::start(family, T::one());
    let mut col1 = vec![T::zero()];
    for n in 1..=max_n {
        let known = TruncSeries::from_coeffs(t.totals().values().to_vec(), n - 1);
        col1.push(t.row_total(n - 1) + bare(&known, n)?);
        let row = (1..=n)
            .map(|f| match f {
                1 => col1[n].clone(),
                _ => multiset_cell(&col1, n, f),
            })
            .collect();
        t.push_row(row);
    }
    Ok(t)
}

/// Each circle intersects at most one other; pairs nest recursively.
pub fn x2_triangle<T: Coeff>(max_n: usize) -> Result<Triangle<T>> {
    recursive_triangle(FamilyId::X2, max_n, |x, n| {
        if n < 2 {
            return Ok(T::zero());
        }
        Ok(pair_fillings(x)?.0.coeff(n - 2))
    })
}

/// Pairs and the six triple-intersection topologies, nesting recursively.
pub fn x3_triangle<T: Coeff>(max_n: usize) -> Result<Triangle<T>> {
    recursive_triangle(FamilyId::X3, max_n, |x, n| {
        if n < 2 {
            return Ok(T::zero());
        }
        Ok(triple_fillings(x)?.bare_objects(n))
    })
}

/// All auxiliary region-filling sequences, each anchored at 1 for `N = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DFamily<T> {
    pub d: IntSequence<T>,
    pub d_hat: IntSequence<T>,
    pub d_bar: IntSequence<T>,
    pub d_tilde: IntSequence<T>,
    pub d2: IntSequence<T>,
    pub d31: IntSequence<T>,
    pub d33: IntSequence<T>,
    pub d34: IntSequence<T>,
    pub d36: IntSequence<T>,
}

/// Every intersecting-family table plus the `D` sequences, up to `max_n`.
#[derive(Clone, Debug)]
pub struct IntersectCounts<T> {
    pub x: Triangle<T>,
    pub xt: Triangle<T>,
    pub x2: Triangle<T>,
    pub x3: Triangle<T>,
    pub d: DFamily<T>,
}

impl<T: Coeff> IntersectCounts<T> {
    pub fn compute(max_n: usize) -> Result<Self> {
        let x2 = x2_triangle::<T>(max_n)?;
        let x3 = x3_triangle::<T>(max_n)?;
        let x2s = TruncSeries::from_coeffs(x2.totals().values().to_vec(), max_n);
        let x3s = TruncSeries::from_coeffs(x3.totals().values().to_vec(), max_n);
        let (d_bar, d_tilde) = pair_fillings(&x2s)?;
        let tf = triple_fillings(&x3s)?;
        let d = DFamily {
            d: d_series(max_n)?.into(),
            d_hat: d_hat_series(max_n)?.into(),
            d_bar: d_bar.into(),
            d_tilde: d_tilde.into(),
            d2: tf.pair.into(),
            d31: tf.rgb.into(),
            d33: tf.chain.into(),
            d34: tf.compressed.into(),
            d36: tf.asymmetric.into(),
        };
        Ok(Self {
            x: x_triangle(max_n)?,
            xt: xt_triangle(max_n)?,
            x2,
            x3,
            d,
        })
    }
}
