//! Coefficient requirements shared by every counting pipeline.
use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssignRef, NumRef};

/// An exact, non-floating integer type usable as a series or table entry.
///
/// `BigUint` is the default (see [`crate::Count`]); fixed-width integers work
/// for small orders and overflow loudly in debug builds.
pub trait Coeff: Integer + Clone + FromPrimitive + NumRef + NumAssignRef + Debug + Display {}

impl<T> Coeff for T where
    T: Integer + Clone + FromPrimitive + NumRef + NumAssignRef + Debug + Display
{
}

pub(crate) fn from_usize<T: Coeff>(n: usize) -> T {
    T::from_usize(n).expect("small integer fits coefficient type")
}
