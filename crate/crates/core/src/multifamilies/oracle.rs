//! Brute-force reference evaluators for the outer core and inner hull.
//!
//! These enumerate every finite cover (every set of distinct submasks whose
//! union is `S`) and every set partition of `S` directly, without any binary
//! factorisation. They are exponential in `2^|S|` and intended for universes
//! of at most four elements.

use super::MultiFamily;
use crate::foundations::{extnat_max, extnat_min, set_partitions, submasks, ExtNat, SubsetMask};

/// Largest universe the oracles accept.
pub const ORACLE_MAX: usize = 4;

/// Minimum over all covers of `S` by distinct subsets. Repeating a part can
/// only raise the sum, so distinct parts suffice.
pub fn out_core_direct(m: &MultiFamily) -> MultiFamily {
    assert!(m.universe().len() <= ORACLE_MAX, "oracle universe too large");
    MultiFamily::from_fn(m.universe(), |s| {
        let parts: Vec<SubsetMask> = submasks(s).collect();
        let covers = (1u64..1 << parts.len()).filter_map(|choice| {
            let chosen = parts.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1);
            let union = chosen.clone().fold(SubsetMask::EMPTY, |acc, (_, &p)| acc.union(p));
            (union == s).then(|| chosen.map(|(_, &p)| m.get(p)).sum::<ExtNat>())
        });
        extnat_min(covers)
    })
}

/// Maximum over all partitions of `S` into nonempty blocks, plus the
/// unbounded contribution of repeated empty parts when `M(∅) > 0`.
pub fn inn_hull_direct(m: &MultiFamily) -> MultiFamily {
    assert!(m.universe().len() <= ORACLE_MAX, "oracle universe too large");
    let empty = m.get(SubsetMask::EMPTY);
    MultiFamily::from_fn(m.universe(), |s| {
        if empty > ExtNat::ZERO {
            return ExtNat::Inf;
        }
        let sums = set_partitions(s).into_iter().map(|blocks| blocks.iter().map(|&b| m.get(b)).sum());
        extnat_max(sums.chain([m.get(s)]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::Universe;
    use crate::multifamilies::{inn_hull, out_core};

    #[test]
    fn agrees_with_dp_on_cardinality_functions() {
        let u = Universe::letters(3).unwrap();
        for k in 0..4u32 {
            let m = MultiFamily::from_fn(&u, |s| ExtNat::Fin((s.len() as u32).saturating_sub(k).pow(2)));
            assert_eq!(out_core_direct(&m), out_core(&m).unwrap());
            assert_eq!(inn_hull_direct(&m), inn_hull(&m).unwrap());
        }
    }
}
