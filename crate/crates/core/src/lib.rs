//! Exact counting and brute-force enumeration of topologically distinct
//! sets of nested, marked, touching and intersecting circles in the plane.
//!
//! Every family is counted twice: by recurrences and generating functions
//! over exact integers ([`nested`], [`marked`], [`intersect`]) and by
//! canonical enumeration of concrete expressions ([`expr`]). The
//! [`verify`] module checks the two against each other and against the
//! embedded reference tables in [`golden`].
//!
//! Counting code is generic over the coefficient type ([`Coeff`]); the
//! aliases below fix it to arbitrary-precision unsigned integers.
pub mod error;
pub mod expr;
pub mod family;
pub mod golden;
pub mod intersect;
pub mod marked;
pub mod nested;
pub mod partition;
pub mod scalar;
pub mod series;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use family::FamilyId;
pub use scalar::Coeff;
pub use series::{CycleIndex, IntSequence, TruncSeries};
pub use triangle::Triangle;

/// Default exact count type.
pub type Count = num_bigint::BigUint;
pub type Series = TruncSeries<Count>;
pub type Sequence = IntSequence<Count>;
pub type Table = Triangle<Count>;
