//! Eventually periodic sequences `ℕ → X` and their limits measured by
//! multi-families on `ℕ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::epset::canonicalize;
use super::{in_g, in_h, out_cogap, EpSet};
use crate::error::{Error, Result};
use crate::foundations::{extnat_min, ExtNat, FiniteMap, SubsetMask, Universe};
use crate::multifamilies::{MultiFamily, MultiSet};
use crate::topology::FiniteTopology;

/// `x_n = prefix[n]` for `n < p`, else `pattern[(n - p) mod q]`; values are
/// indices into the universe.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EpSequenceRepr", into = "EpSequenceRepr")]
pub struct EpSequence {
    universe: Universe,
    prefix: Vec<usize>,
    pattern: Vec<usize>,
}

impl EpSequence {
    pub fn new(universe: &Universe, mut prefix: Vec<usize>, mut pattern: Vec<usize>) -> Result<EpSequence> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if let Some(&bad) = prefix.iter().chain(&pattern).find(|&&v| v >= universe.len()) {
            return Err(Error::UnknownLabel(bad.to_string()));
        }
        canonicalize(&mut prefix, &mut pattern);
        Ok(EpSequence { universe: universe.clone(), prefix, pattern })
    }

    pub fn constant(universe: &Universe, x: usize) -> Result<EpSequence> {
        EpSequence::new(universe, vec![], vec![x])
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn pattern(&self) -> &[usize] {
        &self.pattern
    }

    pub fn at(&self, n: usize) -> usize {
        let p = self.prefix.len();
        if n < p {
            self.prefix[n]
        } else {
            self.pattern[(n - p) % self.pattern.len()]
        }
    }

    /// `n ↦ f(x_n)`.
    pub fn compose(&self, f: &FiniteMap) -> Result<EpSequence> {
        if f.domain() != &self.universe {
            return Err(Error::UniverseMismatch);
        }
        EpSequence::new(
            f.codomain(),
            self.prefix.iter().map(|&v| f.apply(v)).collect(),
            self.pattern.iter().map(|&v| f.apply(v)).collect(),
        )
    }
}

impl fmt::Debug for EpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[usize]| v.iter().map(|&i| self.universe.label(i)).collect::<Vec<_>>().join(",");
        write!(f, "{}({})", show(&self.prefix), show(&self.pattern))
    }
}

/// `{n : x_n ∈ S}`.
pub fn seq_preimage(x: &EpSequence, s: SubsetMask) -> EpSet {
    EpSet::from_fn(x.prefix.len(), x.pattern.len(), |n| s.contains(x.at(n)))
}

/// Multi-families on `ℕ` that the sequence tools know how to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    /// Indicator of the infinite sets.
    G,
    /// Indicator of the cofinite sets.
    H,
    CoGap,
    /// `min(2, coGap)`.
    OutCoGap,
    /// `inf` on infinite sets, `0` on finite ones.
    InnCoGap,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 5] =
        [NamedFamily::G, NamedFamily::H, NamedFamily::CoGap, NamedFamily::OutCoGap, NamedFamily::InnCoGap];

    pub fn value(self, s: &EpSet) -> ExtNat {
        match self {
            NamedFamily::G => ExtNat::indicator(in_g(s)),
            NamedFamily::H => ExtNat::indicator(in_h(s)),
            NamedFamily::CoGap => s.cogap(),
            NamedFamily::OutCoGap => out_cogap(s),
            NamedFamily::InnCoGap => {
                if s.is_finite() {
                    ExtNat::ZERO
                } else {
                    ExtNat::Inf
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::G => "G",
            NamedFamily::H => "H",
            NamedFamily::CoGap => "cogap",
            NamedFamily::OutCoGap => "out-cogap",
            NamedFamily::InnCoGap => "inn-cogap",
        }
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<NamedFamily> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// Push of `M` along `x`: the multi-family `S ↦ M({n : x_n ∈ S})` on `X`.
pub fn seq_push(x: &EpSequence, m: NamedFamily) -> MultiFamily {
    MultiFamily::from_fn(&x.universe, |s| m.value(&seq_preimage(x, s)))
}

/// `y ↦ min { M(S(U)) : U open, y ∈ U }`.
pub fn seq_limit(x: &EpSequence, t: &FiniteTopology, m: NamedFamily) -> Result<MultiSet> {
    t.validate()?;
    if t.universe() != &x.universe {
        return Err(Error::UniverseMismatch);
    }
    let mult = (0..x.universe.len())
        .map(|y| extnat_min(t.open_supersets(SubsetMask::singleton(y)).map(|u| m.value(&seq_preimage(x, u)))))
        .collect();
    MultiSet::new(&x.universe, mult)
}

#[derive(Serialize, Deserialize)]
struct EpSequenceRepr {
    universe: Vec<String>,
    #[serde(default)]
    prefix: Vec<String>,
    pattern: Vec<String>,
}

impl TryFrom<EpSequenceRepr> for EpSequence {
    type Error = Error;

    fn try_from(repr: EpSequenceRepr) -> Result<Self> {
        let universe = Universe::new(repr.universe)?;
        let lookup = |v: &[String]| v.iter().map(|l| universe.index_of(l)).collect::<Result<Vec<_>>>();
        EpSequence::new(&universe, lookup(&repr.prefix)?, lookup(&repr.pattern)?)
    }
}

impl From<EpSequence> for EpSequenceRepr {
    fn from(x: EpSequence) -> Self {
        let labels = |v: &[usize]| v.iter().map(|&i| x.universe.label(i).to_string()).collect();
        EpSequenceRepr {
            universe: x.universe.labels().to_vec(),
            prefix: labels(&x.prefix),
            pattern: labels(&x.pattern),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Universe {
        Universe::letters(2).unwrap()
    }

    fn alternating() -> EpSequence {
        EpSequence::new(&ab(), vec![], vec![0, 1]).unwrap()
    }

    #[test]
    fn canonical_and_json() {
        let x = EpSequence::new(&ab(), vec![0, 1, 0], vec![1, 0, 1, 0]).unwrap();
        assert_eq!(x, alternating());
        let y: EpSequence =
            serde_json::from_str(r#"{"universe":["a","b"],"prefix":["a","b"],"pattern":["a"]}"#).unwrap();
        assert_eq!(y.prefix(), &[0, 1]);
        assert_eq!(y.pattern(), &[0]);
        let bad = serde_json::from_str::<EpSequence>(r#"{"universe":["a"],"pattern":["z"]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn preimages() {
        let x = alternating();
        assert_eq!(seq_preimage(&x, SubsetMask(0b01)), EpSet::evens());
        assert_eq!(seq_preimage(&x, SubsetMask(0b11)), EpSet::naturals());
    }

    #[test]
    fn limits_of_alternating_sequence() {
        let t = FiniteTopology::discrete(&ab());
        let x = alternating();
        let g = seq_limit(&x, &t, NamedFamily::G).unwrap();
        assert_eq!(g.multiplicities(), &[ExtNat::ONE, ExtNat::ONE]);
        let h = seq_limit(&x, &t, NamedFamily::H).unwrap();
        assert_eq!(h.support(), SubsetMask::EMPTY);
        let c = seq_limit(&x, &t, NamedFamily::CoGap).unwrap();
        assert_eq!(c.multiplicities(), &[ExtNat::ONE, ExtNat::ONE]);
    }

    #[test]
    fn limit_of_constant_sequence() {
        let t = FiniteTopology::discrete(&ab());
        let x = EpSequence::constant(&ab(), 0).unwrap();
        let c = seq_limit(&x, &t, NamedFamily::CoGap).unwrap();
        assert_eq!(c.multiplicities(), &[ExtNat::Inf, ExtNat::ZERO]);
    }

    #[test]
    fn rejects_invalid_topology() {
        let t = FiniteTopology::new(&ab(), [SubsetMask(0b01)]);
        assert!(seq_limit(&alternating(), &t, NamedFamily::G).is_err());
    }

    #[test]
    fn named_family_names_round_trip() {
        for f in NamedFamily::ALL {
            assert_eq!(f.name().parse::<NamedFamily>().unwrap(), f);
        }
    }
}
