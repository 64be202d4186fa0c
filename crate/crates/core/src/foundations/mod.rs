//! Extended naturals, finite universes, subset masks and the enumeration
//! utilities every other module builds on.

mod enumerate;
mod extnat;
mod universe;

pub use enumerate::{binary_decompositions, set_partitions, submasks, SplitMode};
pub use extnat::{extnat_max, extnat_min, extnat_sum, ExtNat};
pub use universe::{tuple_digits, FiniteMap, SubsetMask, Universe, MAX_UNIVERSE};
