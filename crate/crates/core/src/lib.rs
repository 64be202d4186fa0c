//! Exact combinatorics of set-family species.
//!
//! Families of subsets (eventual, filters, self-associated, inner/outer),
//! increasing multi-families with their outer core and inner hull, finite
//! topologies with closures and multi-set limits, and an eventually-periodic
//! model of subsets and sequences of the naturals with `Gap`/`coGap`.

pub mod error;
pub mod families;
pub mod foundations;
pub mod multifamilies;
pub mod natep;
pub mod topology;

pub use error::{Error, Result};
pub use families::{push_family, Family, SpeciesReport};
pub use foundations::{ExtNat, FiniteMap, SubsetMask, Universe};
pub use multifamilies::{MultiFamily, MultiSet};
pub use natep::{EpSequence, EpSet};
pub use topology::FiniteTopology;
