//! Multi-sets on a universe and multi-families on its powerset.

pub mod oracle;
mod outer_inner;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::foundations::{extnat_sum, ExtNat, FiniteMap, SubsetMask, Universe};

pub use outer_inner::{inn_hull, is_inner, is_outer, out_core, pairwise_inner, pairwise_outer};

/// A total map from subsets to `{0, 1, ..., inf}`, stored densely by mask.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MultiFamilyRepr", into = "MultiFamilyRepr")]
pub struct MultiFamily {
    universe: Universe,
    values: Vec<ExtNat>,
}

impl MultiFamily {
    pub fn constant(universe: &Universe, value: ExtNat) -> MultiFamily {
        MultiFamily { universe: universe.clone(), values: vec![value; universe.powerset_size()] }
    }

    pub fn from_fn(universe: &Universe, f: impl FnMut(SubsetMask) -> ExtNat) -> MultiFamily {
        MultiFamily { universe: universe.clone(), values: universe.subsets().map(f).collect() }
    }

    /// Takes a dense table indexed by mask.
    pub fn from_values(universe: &Universe, values: Vec<ExtNat>) -> Result<MultiFamily> {
        if values.len() != universe.powerset_size() {
            return Err(Error::UniverseMismatch);
        }
        Ok(MultiFamily { universe: universe.clone(), values })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[ExtNat] {
        &self.values
    }

    #[inline]
    pub fn get(&self, s: SubsetMask) -> ExtNat {
        self.values[s.index()]
    }

    pub fn set(&mut self, s: SubsetMask, v: ExtNat) {
        self.values[s.index()] = v;
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &MultiFamily) -> bool {
        self.universe == other.universe && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Monotone over the subset lattice; checked on covering pairs `S ⊂ S ∪ {x}`.
    pub fn is_increasing(&self) -> bool {
        let n = self.universe.len();
        self.universe.subsets().all(|s| (0..n).filter(|&x| !s.contains(x)).all(|x| self.get(s) <= self.get(s.with(x))))
    }

    pub fn is_decreasing(&self) -> bool {
        let n = self.universe.len();
        self.universe.subsets().all(|s| (0..n).filter(|&x| !s.contains(x)).all(|x| self.get(s) >= self.get(s.with(x))))
    }

    pub(crate) fn require_increasing(&self) -> Result<()> {
        if self.is_increasing() {
            Ok(())
        } else {
            Err(Error::NotIncreasing)
        }
    }

    /// Smallest increasing multi-family above `self`: `S ↦ max_{T ⊆ S} M(T)`.
    pub fn increasing_envelope(&self) -> MultiFamily {
        let mut out = self.clone();
        for s in self.universe.subsets() {
            let below = s.elements().map(|x| out.get(s.without(x))).max().unwrap_or(ExtNat::ZERO);
            if below > out.get(s) {
                out.set(s, below);
            }
        }
        out
    }

    /// `co M (S) = M(S^c)`.
    pub fn co(&self) -> MultiFamily {
        let n = self.universe.len();
        MultiFamily::from_fn(&self.universe, |s| self.get(s.complement(n)))
    }

    /// `Star M (x) = M({x})`.
    pub fn star(&self) -> MultiSet {
        MultiSet {
            universe: self.universe.clone(),
            mult: (0..self.universe.len()).map(|x| self.get(SubsetMask::singleton(x))).collect(),
        }
    }

    pub fn display(&self) -> String {
        let entries: Vec<String> = self
            .universe
            .subsets()
            .filter(|&s| self.get(s) != ExtNat::ZERO)
            .map(|s| format!("{}:{}", self.universe.format_mask(s), self.get(s)))
            .collect();
        format!("[{}]", entries.join(", "))
    }
}

impl fmt::Debug for MultiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Indicator of a family: 1 on members, 0 elsewhere.
pub fn indicator_of_family(family: &Family) -> MultiFamily {
    MultiFamily::from_fn(family.universe(), |s| ExtNat::indicator(family.contains(s)))
}

/// Inverse of [`indicator_of_family`]; fails on values outside `{0, 1}`.
pub fn family_of_indicator(m: &MultiFamily) -> Result<Family> {
    if let Some(&bad) = m.values.iter().find(|&&v| v > ExtNat::ONE) {
        return Err(Error::NotIndicator(bad));
    }
    Ok(Family::from_fn(&m.universe, |s| m.get(s) == ExtNat::ONE))
}

/// `Push(f, M)(S) = M(f^{-1}(S))`.
pub fn push_multifamily(f: &FiniteMap, m: &MultiFamily) -> Result<MultiFamily> {
    if f.domain() != m.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(MultiFamily::from_fn(f.codomain(), |s| m.get(f.preimage(s))))
}

fn finite_threshold(n: ExtNat) -> Result<u32> {
    n.finite().ok_or(Error::InfiniteThreshold)
}

/// `{S : M(S) ≥ n + 1}` for increasing `M`.
pub fn upper_level_family(m: &MultiFamily, n: ExtNat) -> Result<Family> {
    m.require_increasing()?;
    let bound = ExtNat::Fin(finite_threshold(n)?) + ExtNat::ONE;
    Ok(Family::from_fn(&m.universe, |s| m.get(s) >= bound))
}

/// `{S : M(S) ≤ n}`; no monotonicity requirement.
pub fn lower_level_family(m: &MultiFamily, n: ExtNat) -> Result<Family> {
    let bound = ExtNat::Fin(finite_threshold(n)?);
    Ok(Family::from_fn(&m.universe, |s| m.get(s) <= bound))
}

/// Whether the associate of the `n + 1` upper level set of `M` equals the
/// `≤ n` lower level set of `co M`.
pub fn aso_level_identity(m: &MultiFamily, n: ExtNat) -> Result<bool> {
    Ok(upper_level_family(m, n)?.aso() == lower_level_family(&m.co(), n)?)
}

/// A total map from elements to `{0, 1, ..., inf}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MultiSetRepr", into = "MultiSetRepr")]
pub struct MultiSet {
    universe: Universe,
    mult: Vec<ExtNat>,
}

impl MultiSet {
    pub fn new(universe: &Universe, mult: Vec<ExtNat>) -> Result<MultiSet> {
        if mult.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(MultiSet { universe: universe.clone(), mult })
    }

    pub fn zero(universe: &Universe) -> MultiSet {
        MultiSet { universe: universe.clone(), mult: vec![ExtNat::ZERO; universe.len()] }
    }

    pub fn indicator(universe: &Universe, s: SubsetMask) -> MultiSet {
        MultiSet {
            universe: universe.clone(),
            mult: (0..universe.len()).map(|x| ExtNat::indicator(s.contains(x))).collect(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, x: usize) -> ExtNat {
        self.mult[x]
    }

    pub fn multiplicities(&self) -> &[ExtNat] {
        &self.mult
    }

    /// Elements with nonzero multiplicity.
    pub fn support(&self) -> SubsetMask {
        SubsetMask::from_elements((0..self.mult.len()).filter(|&x| self.mult[x] != ExtNat::ZERO))
    }

    pub fn le(&self, other: &MultiSet) -> bool {
        self.universe == other.universe && self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for MultiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> =
            (0..self.mult.len()).map(|x| format!("{}:{}", self.universe.label(x), self.mult[x])).collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

/// Fiberwise sums: `multi-f(L)(y) = Σ_{x ∈ f^{-1}(y)} L(x)`.
pub fn multi_image(f: &FiniteMap, l: &MultiSet) -> Result<MultiSet> {
    if f.domain() != l.universe() {
        return Err(Error::UniverseMismatch);
    }
    let y = f.codomain();
    let mult =
        (0..y.len()).map(|t| extnat_sum(f.preimage(SubsetMask::singleton(t)).elements().map(|x| l.get(x)))).collect();
    MultiSet::new(y, mult)
}

#[derive(Serialize, Deserialize)]
struct SetValue {
    set: Vec<String>,
    value: ExtNat,
}

#[derive(Serialize, Deserialize)]
struct MultiFamilyRepr {
    universe: Vec<String>,
    values: Vec<SetValue>,
}

impl TryFrom<MultiFamilyRepr> for MultiFamily {
    type Error = Error;

    fn try_from(repr: MultiFamilyRepr) -> Result<Self> {
        let universe = Universe::new(repr.universe)?;
        let mut m = MultiFamily::constant(&universe, ExtNat::ZERO);
        for sv in repr.values {
            m.set(universe.mask_of(&sv.set)?, sv.value);
        }
        Ok(m)
    }
}

impl From<MultiFamily> for MultiFamilyRepr {
    fn from(m: MultiFamily) -> Self {
        let mut masks: Vec<SubsetMask> = m.universe.subsets().filter(|&s| m.get(s) != ExtNat::ZERO).collect();
        masks.sort_by_key(|s| (s.len(), s.bits()));
        MultiFamilyRepr {
            universe: m.universe.labels().to_vec(),
            values: masks.into_iter().map(|s| SetValue { set: m.universe.labels_of(s), value: m.get(s) }).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ElementValue {
    element: String,
    value: ExtNat,
}

#[derive(Serialize, Deserialize)]
struct MultiSetRepr {
    universe: Vec<String>,
    values: Vec<ElementValue>,
}

impl TryFrom<MultiSetRepr> for MultiSet {
    type Error = Error;

    fn try_from(repr: MultiSetRepr) -> Result<Self> {
        let universe = Universe::new(repr.universe)?;
        let mut l = MultiSet::zero(&universe);
        for ev in repr.values {
            l.mult[universe.index_of(&ev.element)?] = ev.value;
        }
        Ok(l)
    }
}

impl From<MultiSet> for MultiSetRepr {
    fn from(l: MultiSet) -> Self {
        MultiSetRepr {
            universe: l.universe.labels().to_vec(),
            values: (0..l.mult.len())
                .filter(|&x| l.mult[x] != ExtNat::ZERO)
                .map(|x| ElementValue { element: l.universe.label(x).to_string(), value: l.mult[x] })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x3() -> Universe {
        Universe::letters(3).unwrap()
    }

    #[test]
    fn monotonicity_examples() {
        let u = x3();
        assert!(indicator_of_family(&Family::majority(&u)).is_increasing());
        let inf = MultiFamily::constant(&u, ExtNat::Inf);
        assert!(inf.is_increasing() && inf.is_decreasing());
        let ab = Universe::letters(2).unwrap();
        let m = indicator_of_family(&Family::from_members(&ab, [SubsetMask(0b01)]));
        assert!(!m.is_increasing() && !m.is_decreasing());
    }

    #[test]
    fn indicator_round_trip() {
        let u = x3();
        for w in 0..256u64 {
            let f = Family::from_words(&u, vec![w]);
            assert_eq!(family_of_indicator(&indicator_of_family(&f)).unwrap(), f);
        }
        assert_eq!(indicator_of_family(&Family::empty(&u)), MultiFamily::constant(&u, ExtNat::ZERO));
        let two = MultiFamily::constant(&u, ExtNat::Fin(2));
        assert_eq!(family_of_indicator(&two), Err(Error::NotIndicator(ExtNat::Fin(2))));
    }

    #[test]
    fn co_examples() {
        let u = x3();
        let ua = indicator_of_family(&Family::principal(&u, 0));
        assert_eq!(ua.co(), indicator_of_family(&Family::from_fn(&u, |s| !s.contains(0))));
        assert_eq!(ua.co().co(), ua);
        assert!(ua.co().is_decreasing());
    }

    #[test]
    fn envelope_is_increasing_and_above() {
        let u = x3();
        let raw = MultiFamily::from_fn(&u, |s| ExtNat::Fin(s.bits() % 3));
        let env = raw.increasing_envelope();
        assert!(env.is_increasing() && raw.le(&env));
        assert_eq!(env.increasing_envelope(), env);
    }

    #[test]
    fn push_examples() {
        let x = Universe::indexed(3).unwrap();
        let y = Universe::new(["p", "q"]).unwrap();
        let f = FiniteMap::new(x.clone(), y.clone(), vec![0, 0, 1]).unwrap();
        let pushed = push_multifamily(&f, &indicator_of_family(&Family::majority(&x))).unwrap();
        assert_eq!(pushed, indicator_of_family(&Family::principal(&y, 0)));
        let m = MultiFamily::from_fn(&x, |s| ExtNat::Fin(s.len() as u32));
        assert_eq!(push_multifamily(&FiniteMap::identity(&x), &m).unwrap(), m);
    }

    #[test]
    fn star_examples() {
        let u = x3();
        let s = indicator_of_family(&Family::principal(&u, 0)).star();
        assert_eq!(s.multiplicities(), &[ExtNat::ONE, ExtNat::ZERO, ExtNat::ZERO]);
        assert_eq!(indicator_of_family(&Family::majority(&u)).star(), MultiSet::zero(&u));
        let inf = MultiFamily::constant(&u, ExtNat::Inf).star();
        assert!(inf.multiplicities().iter().all(|&v| v == ExtNat::Inf));
    }

    #[test]
    fn multi_image_examples() {
        let x = Universe::indexed(3).unwrap();
        let y = Universe::new(["p", "q"]).unwrap();
        let f = FiniteMap::new(x.clone(), y.clone(), vec![0, 0, 1]).unwrap();
        let l = MultiSet::new(&x, vec![1.into(), 2.into(), ExtNat::Inf]).unwrap();
        assert_eq!(multi_image(&f, &l).unwrap().multiplicities(), &[ExtNat::Fin(3), ExtNat::Inf]);

        let relabel = FiniteMap::new(x.clone(), x.clone(), vec![2, 0, 1]).unwrap();
        let img = multi_image(&relabel, &l).unwrap();
        assert_eq!(img.multiplicities(), &[2.into(), ExtNat::Inf, 1.into()]);

        let ind = MultiSet::indicator(&x, SubsetMask(0b011));
        assert_eq!(multi_image(&f, &ind).unwrap().get(0), ExtNat::Fin(2));
    }

    #[test]
    fn level_sets() {
        let u = x3();
        let maj = Family::majority(&u);
        assert_eq!(upper_level_family(&indicator_of_family(&maj), ExtNat::ZERO).unwrap(), maj);
        assert_eq!(upper_level_family(&indicator_of_family(&maj), ExtNat::Inf), Err(Error::InfiniteThreshold));
        let hull = inn_hull(&indicator_of_family(&Family::from_fn(&u, |s| !s.is_empty()))).unwrap();
        assert_eq!(upper_level_family(&hull, ExtNat::Fin(2)).unwrap(), Family::from_members(&u, [u.full()]));
        assert!(aso_level_identity(&hull, ExtNat::ONE).unwrap());
    }

    #[test]
    fn json_forms() {
        let m: MultiFamily = serde_json::from_str(
            r#"{"universe":["a","b"],"values":[{"set":["a"],"value":1},{"set":["a","b"],"value":"inf"}]}"#,
        )
        .unwrap();
        assert_eq!(m.get(SubsetMask(0b01)), ExtNat::ONE);
        assert_eq!(m.get(SubsetMask(0b10)), ExtNat::ZERO);
        assert_eq!(m.get(SubsetMask(0b11)), ExtNat::Inf);
        let back: MultiFamily = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);

        let l: MultiSet =
            serde_json::from_str(r#"{"universe":["a","b"],"values":[{"element":"b","value":"inf"}]}"#).unwrap();
        assert_eq!(l.multiplicities(), &[ExtNat::ZERO, ExtNat::Inf]);
    }
}
