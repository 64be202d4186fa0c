use serde::{Deserialize, Serialize};

use super::Family;
use crate::error::{Error, Result};
use crate::foundations::{set_partitions, SubsetMask};

/// Whether a finite partition of the universe has a part in the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionVerdict {
    pub parts: Vec<SubsetMask>,
    pub measured: bool,
    pub witness_part: Option<usize>,
}

fn require_self_aso_eventual(family: &Family) -> Result<()> {
    if family.is_eventual() && family.is_self_aso() {
        Ok(())
    } else {
        Err(Error::NotSelfAsoEventual)
    }
}

fn is_partition(family: &Family, parts: &[SubsetMask]) -> bool {
    let full = family.universe().full();
    let mut seen = SubsetMask::EMPTY;
    for &p in parts {
        if !p.is_subset(full) || !p.is_disjoint(seen) {
            return false;
        }
        seen = seen.union(p);
    }
    seen == full
}

/// Decides measuredness of `parts` for a self-associated eventual family.
///
/// Empty parts are allowed; they are never members.
pub fn partition_verdict(family: &Family, parts: &[SubsetMask]) -> Result<PartitionVerdict> {
    require_self_aso_eventual(family)?;
    if !is_partition(family, parts) {
        return Err(Error::NotAPartition);
    }
    Ok(verdict_unchecked(family, parts))
}

fn verdict_unchecked(family: &Family, parts: &[SubsetMask]) -> PartitionVerdict {
    let witness_part = parts.iter().position(|&p| family.contains(p));
    PartitionVerdict { parts: parts.to_vec(), measured: witness_part.is_some(), witness_part }
}

/// The four equivalent conditions for a self-associated eventual family,
/// each evaluated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FltReport {
    /// The indicator is additive on every disjoint pair.
    pub additive: bool,
    /// Every finite partition (nonempty blocks) is measured.
    pub no_nonmeasured: bool,
    /// Every ordered 3-partition, empty parts allowed, is measured.
    pub no_nonmeasured_3: bool,
    /// Closed under pairwise intersection.
    pub filter: bool,
}

impl FltReport {
    pub fn all_equal(&self) -> bool {
        let v = self.additive;
        self.no_nonmeasured == v && self.no_nonmeasured_3 == v && self.filter == v
    }
}

pub fn prop_flt_report(family: &Family) -> Result<FltReport> {
    require_self_aso_eventual(family)?;
    let u = family.universe();
    let n = u.len();

    let ind = |s: SubsetMask| family.contains(s) as u8;
    let additive =
        u.subsets().all(|s| u.subsets().filter(|t| t.is_disjoint(s)).all(|t| ind(s.union(t)) == ind(s) + ind(t)));

    let no_nonmeasured = set_partitions(u.full()).iter().all(|parts| verdict_unchecked(family, parts).measured);

    // every assignment of elements to three labelled parts
    let no_nonmeasured_3 = (0..3usize.pow(n as u32)).all(|code| {
        let mut parts = [SubsetMask::EMPTY; 3];
        let mut c = code;
        for x in 0..n {
            parts[c % 3] = parts[c % 3].with(x);
            c /= 3;
        }
        verdict_unchecked(family, &parts).measured
    });

    let members: Vec<SubsetMask> = family.members().collect();
    let filter = members.iter().all(|&s| members.iter().all(|&t| family.contains(s.intersect(t))));

    Ok(FltReport { additive, no_nonmeasured, no_nonmeasured_3, filter })
}
