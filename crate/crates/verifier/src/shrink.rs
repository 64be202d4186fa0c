//! Greedy counterexample minimization.

use setfam::{ExtNat, Family, MultiFamily};

use crate::sample::VALUES;

/// Lowers single values, keeping the table increasing, for as long as
/// `fails` still holds. Each accepted step strictly lowers one entry, so
/// the loop terminates.
pub fn shrink_multifamily(m: &MultiFamily, fails: impl Fn(&MultiFamily) -> bool) -> MultiFamily {
    let mut cur = m.clone();
    'outer: loop {
        for s in cur.universe().subsets() {
            let v = cur.get(s);
            for &lower in VALUES.iter().chain([&v.finite().map_or(ExtNat::ZERO, |x| ExtNat::Fin(x.saturating_sub(1)))])
            {
                if lower >= v {
                    continue;
                }
                let mut cand = cur.clone();
                cand.set(s, lower);
                if cand.is_increasing() && fails(&cand) {
                    cur = cand;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Removes members one at a time while `fails` still holds.
pub fn shrink_family(f: &Family, fails: impl Fn(&Family) -> bool) -> Family {
    let mut cur = f.clone();
    'outer: loop {
        let members: Vec<_> = cur.members().collect();
        for s in members {
            let mut cand = cur.clone();
            cand.remove(s);
            if fails(&cand) {
                cur = cand;
                continue 'outer;
            }
        }
        return cur;
    }
}
