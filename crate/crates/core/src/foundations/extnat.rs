//! Extended naturals `{0, 1, 2, ..., inf}` with saturating addition.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A multiplicity: a finite count or infinity.
///
/// Finite values are capped at `u32::MAX`; any sum that would exceed the cap
/// saturates to [`ExtNat::Inf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);
    pub const ONE: ExtNat = ExtNat::Fin(1);
    pub const INF: ExtNat = ExtNat::Inf;

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }

    /// Indicator value of a boolean.
    pub fn indicator(b: bool) -> ExtNat {
        if b {
            ExtNat::ONE
        } else {
            ExtNat::ZERO
        }
    }

    /// Multiplies by a natural number, saturating.
    pub fn times(self, k: u32) -> ExtNat {
        match self {
            ExtNat::Fin(0) => ExtNat::ZERO,
            _ if k == 0 => ExtNat::ZERO,
            ExtNat::Fin(v) => v.checked_mul(k).map_or(ExtNat::Inf, ExtNat::Fin),
            ExtNat::Inf => ExtNat::Inf,
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u32> for ExtNat {
    fn from(v: u32) -> Self {
        ExtNat::Fin(v)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_add(b).map_or(ExtNat::Inf, ExtNat::Fin),
            _ => ExtNat::Inf,
        }
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, Add::add)
    }
}

/// Saturating sum; the empty sum is 0.
pub fn extnat_sum<I: IntoIterator<Item = ExtNat>>(values: I) -> ExtNat {
    values.into_iter().sum()
}

/// Minimum; the empty minimum is `inf`.
pub fn extnat_min<I: IntoIterator<Item = ExtNat>>(values: I) -> ExtNat {
    values.into_iter().min().unwrap_or(ExtNat::Inf)
}

/// Maximum; the empty maximum is 0.
pub fn extnat_max<I: IntoIterator<Item = ExtNat>>(values: I) -> ExtNat {
    values.into_iter().max().unwrap_or(ExtNat::ZERO)
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(ExtNat::Inf)
        } else {
            t.parse::<u32>().map(ExtNat::Fin)
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(v) => serializer.serialize_u32(*v),
            ExtNat::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtNatVisitor;

        impl Visitor<'_> for ExtNatVisitor {
            type Value = ExtNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
                u32::try_from(v).map(ExtNat::Fin).map_err(|_| E::custom(format!("{v} exceeds the finite cap")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
                u64::try_from(v)
                    .map_err(|_| E::custom("multiplicities are nonnegative"))
                    .and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
                v.parse().map_err(|_| E::custom(format!("bad multiplicity `{v}`")))
            }
        }

        deserializer.deserialize_any(ExtNatVisitor)
    }
}
