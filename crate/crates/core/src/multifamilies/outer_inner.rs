//! Outer core and inner hull by subset dynamic programming.
//!
//! Both recurrences visit subsets in increasing mask order, so every proper
//! submask is final before its superset is touched. A cover (partition) with
//! `k` parts always factors as one part against the union of the others, so
//! binary splits of already-reduced values reach every finite cover
//! (partition).
//!
//! Empty parts: a partition may repeat `∅` any number of times, so once
//! `M(∅) > 0` the inner hull is `inf` everywhere. Covers need at least one
//! part, which makes `Out M (∅) = M(∅)`.

use super::MultiFamily;
use crate::error::Result;
use crate::foundations::{binary_decompositions, ExtNat, SplitMode, SubsetMask};

/// `Out M (S) = min { Σ M(S_i) : ∪ S_i = S }`, the largest outer minorant.
pub fn out_core(m: &MultiFamily) -> Result<MultiFamily> {
    m.require_increasing()?;
    let mut out = m.clone();
    for s in m.universe().subsets() {
        let best = binary_decompositions(s, SplitMode::Cover)
            .map(|(a, b)| out.get(a) + out.get(b))
            .fold(m.get(s), ExtNat::min);
        out.set(s, best);
    }
    Ok(out)
}

/// `Inn M (S) = max { Σ M(S_i) : ⊔ S_i = S }`, the smallest inner majorant.
pub fn inn_hull(m: &MultiFamily) -> Result<MultiFamily> {
    m.require_increasing()?;
    if m.get(SubsetMask::EMPTY) != ExtNat::ZERO {
        return Ok(MultiFamily::constant(m.universe(), ExtNat::Inf));
    }
    let mut inn = m.clone();
    for s in m.universe().subsets() {
        let best = binary_decompositions(s, SplitMode::Disjoint)
            .filter(|(a, b)| a < b)
            .map(|(a, b)| inn.get(a) + inn.get(b))
            .fold(m.get(s), ExtNat::max);
        inn.set(s, best);
    }
    Ok(inn)
}

/// Fixed point of [`out_core`].
pub fn is_outer(m: &MultiFamily) -> Result<bool> {
    Ok(out_core(m)? == *m)
}

/// Fixed point of [`inn_hull`].
pub fn is_inner(m: &MultiFamily) -> Result<bool> {
    Ok(inn_hull(m)? == *m)
}

/// Direct subadditivity: `M(A ∪ B) ≤ M(A) + M(B)` for every pair.
pub fn pairwise_outer(m: &MultiFamily) -> bool {
    let u = m.universe();
    u.subsets().all(|a| u.subsets().all(|b| m.get(a.union(b)) <= m.get(a) + m.get(b)))
}

/// Direct superadditivity on disjoint pairs, `∅` with itself included.
pub fn pairwise_inner(m: &MultiFamily) -> bool {
    let u = m.universe();
    u.subsets().all(|a| u.subsets().filter(|b| b.is_disjoint(a)).all(|b| m.get(a.union(b)) >= m.get(a) + m.get(b)))
}
