//! Families of subsets of a finite universe and their species.
//!
//! A family is stored as a dense bitset over the `2^n` subsets of its
//! universe. Everything here is exact and exhaustive: predicates quantify
//! over all members, all supersets or all pairs as their definitions demand.

mod constructions;
mod partitions;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::{FiniteMap, SubsetMask, Universe};

pub use constructions::{extend_from, majority_projection, product_raw, product_self_aso, restrict_to, ProductOrder};
pub use partitions::{partition_verdict, prop_flt_report, FltReport, PartitionVerdict};

/// A set of subsets of one universe.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct Family {
    universe: Universe,
    bits: Vec<u64>,
}

fn words_for(u: &Universe) -> usize {
    u.powerset_size().div_ceil(64)
}

impl Family {
    pub fn empty(universe: &Universe) -> Family {
        Family { universe: universe.clone(), bits: vec![0; words_for(universe)] }
    }

    /// The family of all subsets.
    pub fn all(universe: &Universe) -> Family {
        Family::from_fn(universe, |_| true)
    }

    pub fn from_fn(universe: &Universe, mut pred: impl FnMut(SubsetMask) -> bool) -> Family {
        let mut f = Family::empty(universe);
        for s in universe.subsets() {
            if pred(s) {
                f.insert(s);
            }
        }
        f
    }

    pub fn from_members<I: IntoIterator<Item = SubsetMask>>(universe: &Universe, members: I) -> Family {
        let mut f = Family::empty(universe);
        for s in members {
            f.insert(s);
        }
        f
    }

    /// Builds from raw membership words (bit `s` of the table is subset `s`).
    pub fn from_words(universe: &Universe, mut words: Vec<u64>) -> Family {
        words.resize(words_for(universe), 0);
        let size = universe.powerset_size();
        if size < 64 {
            words[0] &= (1u64 << size) - 1;
        }
        Family { universe: universe.clone(), bits: words }
    }

    /// The principal ultrafilter `U_x = {S : x ∈ S}`.
    pub fn principal(universe: &Universe, x: usize) -> Family {
        Family::from_fn(universe, |s| s.contains(x))
    }

    /// `{S : |S| ≥ k}`.
    pub fn at_least(universe: &Universe, k: usize) -> Family {
        Family::from_fn(universe, |s| s.len() >= k)
    }

    /// Strict majority: `{S : |S| > n/2}`.
    pub fn majority(universe: &Universe) -> Family {
        Family::at_least(universe, universe.len() / 2 + 1)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    fn n(&self) -> usize {
        self.universe.len()
    }

    #[inline]
    pub fn contains(&self, s: SubsetMask) -> bool {
        let i = s.index();
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, s: SubsetMask) {
        let i = s.index();
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, s: SubsetMask) {
        let i = s.index();
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.universe.subsets().filter(move |&s| self.contains(s))
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.universe == other.universe && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    // ---- species predicates ----

    /// Closed upward: `S ∈ F, S ⊆ S'` implies `S' ∈ F`.
    pub fn is_eventual(&self) -> bool {
        let n = self.n();
        self.members().all(|s| (0..n).all(|x| self.contains(s.with(x))))
    }

    /// Closed downward.
    pub fn is_co_eventual(&self) -> bool {
        let n = self.n();
        self.members().all(|s| (0..n).all(|x| self.contains(s.without(x))))
    }

    /// All subsets that are not members.
    pub fn complement_family(&self) -> Family {
        Family::from_fn(&self.universe, |s| !self.contains(s))
    }

    /// `{S^c : S ∈ F}`.
    pub fn family_of_complements(&self) -> Family {
        let n = self.n();
        Family::from_fn(&self.universe, |s| self.contains(s.complement(n)))
    }

    /// The associate `{S : S^c ∉ F}`.
    pub fn aso(&self) -> Family {
        let n = self.n();
        Family::from_fn(&self.universe, |s| !self.contains(s.complement(n)))
    }

    pub fn is_self_aso(&self) -> bool {
        let n = self.n();
        self.universe.subsets().all(|s| self.contains(s) != self.contains(s.complement(n)))
    }

    fn intersection_closed(&self) -> bool {
        let members: Vec<SubsetMask> = self.members().collect();
        members.iter().enumerate().all(|(i, &s)| members[i + 1..].iter().all(|&t| self.contains(s.intersect(t))))
    }

    /// Eventual and closed under pairwise intersection. No properness requirement.
    pub fn is_filter(&self) -> bool {
        self.is_eventual() && self.intersection_closed()
    }

    /// Neither empty nor containing the empty set.
    pub fn is_proper(&self) -> bool {
        !self.is_empty() && !self.contains(SubsetMask::EMPTY)
    }

    pub fn is_ultrafilter(&self) -> bool {
        self.is_filter() && self.is_self_aso()
    }

    fn require_eventual(&self) -> Result<()> {
        if self.is_eventual() {
            Ok(())
        } else {
            Err(Error::NotEventual)
        }
    }

    /// Condition (O): the union of two non-members is a non-member.
    pub fn condition_o(&self) -> Result<bool> {
        self.require_eventual()?;
        Ok(self.condition_o_raw())
    }

    fn condition_o_raw(&self) -> bool {
        let outside: Vec<SubsetMask> = self.universe.subsets().filter(|&s| !self.contains(s)).collect();
        outside.iter().enumerate().all(|(i, &s)| outside[i..].iter().all(|&t| !self.contains(s.union(t))))
    }

    /// Condition (I): no two disjoint members.
    pub fn condition_i(&self) -> Result<bool> {
        self.require_eventual()?;
        Ok(self.condition_i_raw())
    }

    fn condition_i_raw(&self) -> bool {
        // `∅` is disjoint from itself, so a family holding `∅` fails.
        let members: Vec<SubsetMask> = self.members().collect();
        members.iter().enumerate().all(|(i, &s)| members[i..].iter().all(|&t| !s.is_disjoint(t)))
    }

    /// The largest eventual subfamily: `{S : every S' ⊇ S is in F}`.
    pub fn eventual_core(&self) -> Family {
        let n = self.n();
        let mut core = Family::empty(&self.universe);
        for bits in (0..self.universe.powerset_size() as u32).rev() {
            let s = SubsetMask(bits);
            if self.contains(s) && (0..n).filter(|&x| !s.contains(x)).all(|x| core.contains(s.with(x))) {
                core.insert(s);
            }
        }
        core
    }

    /// `{x : {x} ∈ F}`.
    pub fn star(&self) -> SubsetMask {
        SubsetMask::from_elements((0..self.n()).filter(|&x| self.contains(SubsetMask::singleton(x))))
    }

    pub fn classify(&self) -> SpeciesReport {
        let eventual = self.is_eventual();
        let filter = eventual && self.intersection_closed();
        let self_aso = self.is_self_aso();
        let (condition_o, condition_i) =
            if eventual { (Some(self.condition_o_raw()), Some(self.condition_i_raw())) } else { (None, None) };
        SpeciesReport {
            eventual,
            co_eventual: self.is_co_eventual(),
            filter,
            ultrafilter: filter && self_aso,
            self_aso,
            condition_o,
            condition_i,
            finitely_additive: condition_o.zip(condition_i).map(|(o, i)| o && i),
            proper: self.is_proper(),
        }
    }

    pub fn display(&self) -> String {
        let members: Vec<String> = self.members().map(|s| self.universe.format_mask(s)).collect();
        format!("{{{}}}", members.join(", "))
    }
}

/// `Push(f, F) = {S ⊆ Y : f^{-1}(S) ∈ F}`.
pub fn push_family(f: &FiniteMap, family: &Family) -> Result<Family> {
    if f.domain() != family.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(Family::from_fn(f.codomain(), |s| family.contains(f.preimage(s))))
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Species flags of a family.
///
/// The (O)/(I) conditions and finite additivity are only meaningful for
/// eventual families and are `None` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeciesReport {
    pub eventual: bool,
    pub co_eventual: bool,
    pub filter: bool,
    pub ultrafilter: bool,
    pub self_aso: bool,
    pub condition_o: Option<bool>,
    pub condition_i: Option<bool>,
    pub finitely_additive: Option<bool>,
    pub proper: bool,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    universe: Vec<String>,
    members: Vec<Vec<String>>,
}

impl TryFrom<FamilyRepr> for Family {
    type Error = Error;

    fn try_from(repr: FamilyRepr) -> Result<Self> {
        let universe = Universe::new(repr.universe)?;
        let masks = repr.members.iter().map(|m| universe.mask_of(m)).collect::<Result<Vec<_>>>()?;
        Ok(Family::from_members(&universe, masks))
    }
}

impl From<Family> for FamilyRepr {
    fn from(f: Family) -> Self {
        let mut masks: Vec<SubsetMask> = f.members().collect();
        masks.sort_by_key(|s| (s.len(), s.bits()));
        FamilyRepr {
            universe: f.universe.labels().to_vec(),
            members: masks.into_iter().map(|s| f.universe.labels_of(s)).collect(),
        }
    }
}
