//! Finite topological spaces, closures of (multi-)families and limit sets.
//!
//! Neighbourhoods are always open neighbourhoods. On a finite space the
//! Hausdorff property forces the discrete topology, so statements that need
//! separation are only meaningful there.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::foundations::{extnat_min, FiniteMap, SubsetMask, Universe};
use crate::multifamilies::{MultiFamily, MultiSet};

/// Largest universe for which [`all_topologies`] enumerates.
pub const ENUMERATION_MAX: usize = 4;

/// A finite space given by its list of open sets.
///
/// Construction never fails; validity is computed once and stored, and every
/// operation that needs a topology rejects an invalid one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TopologyRepr", into = "TopologyRepr")]
pub struct FiniteTopology {
    universe: Universe,
    opens: Vec<SubsetMask>,
    open_table: Vec<bool>,
    valid: bool,
}

impl FiniteTopology {
    pub fn new<I: IntoIterator<Item = SubsetMask>>(universe: &Universe, opens: I) -> FiniteTopology {
        let full = universe.full();
        let mut opens: Vec<SubsetMask> = opens.into_iter().collect();
        opens.sort_by_key(|s| (s.len(), s.bits()));
        opens.dedup();
        let in_range = opens.iter().all(|s| s.is_subset(full));
        let mut open_table = vec![false; universe.powerset_size()];
        if in_range {
            for s in &opens {
                open_table[s.index()] = true;
            }
        }
        let valid = in_range
            && open_table[0]
            && open_table[full.index()]
            && opens
                .iter()
                .all(|a| opens.iter().all(|b| open_table[a.union(*b).index()] && open_table[a.intersect(*b).index()]));
        FiniteTopology { universe: universe.clone(), opens, open_table, valid }
    }

    pub fn discrete(universe: &Universe) -> FiniteTopology {
        FiniteTopology::new(universe, universe.subsets())
    }

    pub fn indiscrete(universe: &Universe) -> FiniteTopology {
        FiniteTopology::new(universe, [SubsetMask::EMPTY, universe.full()])
    }

    /// `{∅, {first element}, X}`; the Sierpiński space on two points.
    pub fn sierpinski(universe: &Universe) -> FiniteTopology {
        FiniteTopology::new(universe, [SubsetMask::EMPTY, SubsetMask::singleton(0), universe.full()])
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    pub fn is_open(&self, s: SubsetMask) -> bool {
        self.open_table.get(s.index()).copied().unwrap_or(false)
    }

    /// Axioms: `∅` and `X` open, closed under pairwise union and intersection.
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn validate(&self) -> Result<()> {
        if self.valid {
            Ok(())
        } else {
            Err(Error::InvalidTopology)
        }
    }

    /// Every pair of distinct points is separated by disjoint open sets.
    pub fn is_hausdorff(&self) -> bool {
        let n = self.universe.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .any(|u| self.opens.iter().any(|v| v.contains(y) && u.is_disjoint(*v)))
            })
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.open_table.iter().all(|&o| o)
    }

    pub fn open_supersets(&self, s: SubsetMask) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens.iter().copied().filter(move |u| s.is_subset(*u))
    }
}

/// Every topology on `universe`, in a deterministic order.
///
/// # Panics
/// If the universe is larger than [`ENUMERATION_MAX`].
pub fn all_topologies(universe: &Universe) -> Vec<FiniteTopology> {
    let n = universe.len();
    assert!(n <= ENUMERATION_MAX, "topology enumeration capped at {ENUMERATION_MAX} points");
    let full = universe.full();
    let middle: Vec<SubsetMask> = universe.subsets().filter(|&s| !s.is_empty() && s != full).collect();
    (0u64..1 << middle.len())
        .filter_map(|choice| {
            let opens = middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &s)| s)
                .chain([SubsetMask::EMPTY, full]);
            let t = FiniteTopology::new(universe, opens);
            t.is_valid().then_some(t)
        })
        .collect()
}

/// Preimages of open sets are open.
pub fn is_continuous(f: &FiniteMap, from: &FiniteTopology, to: &FiniteTopology) -> Result<bool> {
    from.validate()?;
    to.validate()?;
    if f.domain() != from.universe() || f.codomain() != to.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(to.opens().iter().all(|&v| from.is_open(f.preimage(v))))
}

fn check(t: &FiniteTopology, u: &Universe) -> Result<()> {
    t.validate()?;
    if t.universe() != u {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

/// `cl F = {S : every open U ⊇ S is in F}`.
pub fn closure_family(family: &Family, t: &FiniteTopology) -> Result<Family> {
    check(t, family.universe())?;
    Ok(Family::from_fn(family.universe(), |s| t.open_supersets(s).all(|u| family.contains(u))))
}

/// Points all of whose open neighbourhoods are members.
pub fn limit_set(family: &Family, t: &FiniteTopology) -> Result<SubsetMask> {
    check(t, family.universe())?;
    let n = family.universe().len();
    Ok(SubsetMask::from_elements(
        (0..n).filter(|&x| t.open_supersets(SubsetMask::singleton(x)).all(|u| family.contains(u))),
    ))
}

/// `cl M (S) = min { M(U) : U open, U ⊇ S }`.
pub fn closure_multifamily(m: &MultiFamily, t: &FiniteTopology) -> Result<MultiFamily> {
    check(t, m.universe())?;
    if !m.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    Ok(MultiFamily::from_fn(m.universe(), |s| extnat_min(t.open_supersets(s).map(|u| m.get(u)))))
}

/// `lim M (x) = min { M(U) : U open, x ∈ U }`.
pub fn multiset_limit(m: &MultiFamily, t: &FiniteTopology) -> Result<MultiSet> {
    check(t, m.universe())?;
    if !m.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    let n = m.universe().len();
    let mult = (0..n).map(|x| extnat_min(t.open_supersets(SubsetMask::singleton(x)).map(|u| m.get(u)))).collect();
    MultiSet::new(m.universe(), mult)
}

/// The limit point of an inner eventual family in a Hausdorff space, if any.
///
/// Two limit points would contradict uniqueness and are reported
/// as [`Error::MultipleLimits`].
pub fn unique_limit_inner(family: &Family, t: &FiniteTopology) -> Result<Option<usize>> {
    check(t, family.universe())?;
    if !family.condition_i()? {
        return Err(Error::NotInner);
    }
    if !t.is_hausdorff() {
        return Err(Error::NotHausdorff);
    }
    let mut points = limit_set(family, t)?.elements();
    match (points.next(), points.next()) {
        (Some(a), Some(b)) => Err(Error::MultipleLimits(a, b)),
        (a, _) => Ok(a),
    }
}

#[derive(Serialize, Deserialize)]
struct TopologyRepr {
    universe: Vec<String>,
    opens: Vec<Vec<String>>,
}

impl TryFrom<TopologyRepr> for FiniteTopology {
    type Error = Error;

    fn try_from(repr: TopologyRepr) -> Result<Self> {
        let universe = Universe::new(repr.universe)?;
        let opens = repr.opens.iter().map(|o| universe.mask_of(o)).collect::<Result<Vec<_>>>()?;
        Ok(FiniteTopology::new(&universe, opens))
    }
}

impl From<FiniteTopology> for TopologyRepr {
    fn from(t: FiniteTopology) -> Self {
        TopologyRepr {
            universe: t.universe.labels().to_vec(),
            opens: t.opens.iter().map(|&o| t.universe.labels_of(o)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::ExtNat;
    use crate::multifamilies::{indicator_of_family, inn_hull};

    fn x3() -> Universe {
        Universe::letters(3).unwrap()
    }

    #[test]
    fn named_topologies() {
        let u = x3();
        let d = FiniteTopology::discrete(&u);
        assert!(d.is_valid() && d.is_hausdorff());
        let i = FiniteTopology::indiscrete(&u);
        assert!(i.is_valid() && !i.is_hausdorff());
        let ab = Universe::letters(2).unwrap();
        let s = FiniteTopology::sierpinski(&ab);
        assert!(s.is_valid() && !s.is_hausdorff());
        let broken = FiniteTopology::new(&u, [SubsetMask::EMPTY, SubsetMask(0b001), SubsetMask(0b010), u.full()]);
        assert!(!broken.is_valid());
        assert_eq!(closure_family(&Family::all(&u), &broken), Err(Error::InvalidTopology));
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_topologies(&Universe::letters(n).unwrap()).len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn hausdorff_means_discrete() {
        for n in 1..=3 {
            for t in all_topologies(&Universe::letters(n).unwrap()) {
                assert_eq!(t.is_hausdorff(), t.is_discrete());
            }
        }
    }

    #[test]
    fn closure_examples() {
        let u = x3();
        let maj = Family::majority(&u);
        assert_eq!(closure_family(&maj, &FiniteTopology::discrete(&u)).unwrap(), maj);
        assert_eq!(
            closure_family(&maj, &FiniteTopology::indiscrete(&u)).unwrap(),
            Family::from_fn(&u, |s| !s.is_empty())
        );
        let all = Family::all(&u);
        assert_eq!(closure_family(&all, &FiniteTopology::indiscrete(&u)).unwrap(), all);
    }

    #[test]
    fn limit_set_examples() {
        let u = x3();
        let d = FiniteTopology::discrete(&u);
        assert_eq!(limit_set(&Family::principal(&u, 0), &d).unwrap(), SubsetMask(0b001));
        assert_eq!(limit_set(&Family::majority(&u), &d).unwrap(), SubsetMask::EMPTY);
    }

    #[test]
    fn multifamily_closure_examples() {
        let u = x3();
        let m = inn_hull(&indicator_of_family(&Family::from_fn(&u, |s| !s.is_empty()))).unwrap();
        assert_eq!(closure_multifamily(&m, &FiniteTopology::discrete(&u)).unwrap(), m);
        let ind = FiniteTopology::indiscrete(&u);
        let cl = closure_multifamily(&m, &ind).unwrap();
        assert!(u.subsets().filter(|s| !s.is_empty()).all(|s| cl.get(s) == m.get(u.full())));
        assert_eq!(closure_multifamily(&cl, &ind).unwrap(), cl);
        let lim = multiset_limit(&m, &ind).unwrap();
        assert!(lim.multiplicities().iter().all(|&v| v == ExtNat::Fin(3)));

        let ua = indicator_of_family(&Family::principal(&u, 0));
        let lim = multiset_limit(&ua, &FiniteTopology::discrete(&u)).unwrap();
        assert_eq!(lim.multiplicities(), &[ExtNat::ONE, ExtNat::ZERO, ExtNat::ZERO]);

        let bad = indicator_of_family(&Family::from_members(&u, [SubsetMask(0b001)]));
        assert_eq!(closure_multifamily(&bad, &ind), Err(Error::NotIncreasing));
    }

    #[test]
    fn unique_limit_examples() {
        let u = x3();
        let d = FiniteTopology::discrete(&u);
        assert_eq!(unique_limit_inner(&Family::principal(&u, 0), &d), Ok(Some(0)));
        assert_eq!(unique_limit_inner(&Family::majority(&u), &d), Ok(None));
        assert_eq!(
            unique_limit_inner(&Family::principal(&u, 0), &FiniteTopology::indiscrete(&u)),
            Err(Error::NotHausdorff)
        );
        let nonempty = Family::from_fn(&u, |s| !s.is_empty());
        assert_eq!(unique_limit_inner(&nonempty, &d), Err(Error::NotInner));
    }

    #[test]
    fn continuity() {
        let u = Universe::letters(2).unwrap();
        let swap = FiniteMap::new(u.clone(), u.clone(), vec![1, 0]).unwrap();
        let s = FiniteTopology::sierpinski(&u);
        assert!(!is_continuous(&swap, &s, &s).unwrap());
        assert!(is_continuous(&FiniteMap::identity(&u), &s, &s).unwrap());
        assert!(is_continuous(&swap, &FiniteTopology::discrete(&u), &s).unwrap());
    }

    #[test]
    fn json_form() {
        let t: FiniteTopology = serde_json::from_str(r#"{"universe":["a","b"],"opens":[[],["a"],["a","b"]]}"#).unwrap();
        assert_eq!(t, FiniteTopology::sierpinski(&Universe::letters(2).unwrap()));
    }
}
