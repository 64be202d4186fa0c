//! Covers and partitions of ep-sets measured by `coGap`.

use super::epset::lcm;
use super::EpSet;
use crate::error::{Error, Result};
use crate::foundations::ExtNat;

pub fn in_g(s: &EpSet) -> bool {
    !s.is_finite()
}

pub fn in_h(s: &EpSet) -> bool {
    s.is_cofinite()
}

/// Whether `value` is unchanged after flipping membership of each index in
/// `toggles`.
pub fn finitely_insensitive_probe(value: impl Fn(&EpSet) -> ExtNat, s: &EpSet, toggles: &[usize]) -> bool {
    value(s) == value(&s.toggled(toggles))
}

pub fn even_odd_split(s: &EpSet) -> (EpSet, EpSet) {
    (s.intersect(&EpSet::evens()), s.intersect(&EpSet::odds()))
}

/// Closed form of the outer core of `coGap`.
pub fn out_cogap(s: &EpSet) -> ExtNat {
    s.cogap().min(ExtNat::Fin(2))
}

/// Both readings of the gap statistic attached to `coGap`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CoGapDiagnostic {
    pub cogap: ExtNat,
    pub max_gap_anywhere: ExtNat,
    pub agree: bool,
}

pub fn cogap_diagnostic(s: &EpSet) -> CoGapDiagnostic {
    let cogap = s.cogap();
    let max_gap_anywhere = s.max_gap_anywhere();
    CoGapDiagnostic { cogap, max_gap_anywhere, agree: cogap == max_gap_anywhere }
}

/// Cheapest cover found among covers whose parts are `S ∩ R` with `R` a
/// union of residue classes modulo some `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSearch {
    pub parts: Vec<EpSet>,
    pub total: ExtNat,
    pub modulus: usize,
}

/// Longest cyclic run of `true` in `bits`; `inf` if all true.
fn cyclic_max_run(bits: &[bool]) -> ExtNat {
    if bits.iter().all(|&b| b) {
        return ExtNat::Inf;
    }
    let start = bits.iter().position(|&b| !b).unwrap();
    let (mut best, mut cur) = (0u32, 0u32);
    for i in 1..=bits.len() {
        if bits[(start + i) % bits.len()] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    ExtNat::Fin(best)
}

/// Exhaustive search over covers of `S` by at most `max_parts` sets of the
/// form `S ∩ {n : n mod L ∈ A}`, for every modulus `L ≤ max_modulus`.
///
/// The cost of a residue set is monotone in `A`, so partitions of the
/// residues reach the optimum over covers.
pub fn residue_cover_search(s: &EpSet, max_parts: usize, max_modulus: usize) -> CoverSearch {
    assert!(max_parts >= 1 && (1..=16).contains(&max_modulus));
    let mut best = CoverSearch { parts: vec![s.clone()], total: s.cogap(), modulus: 1 };
    let p = s.preperiod();
    for l in 2..=max_modulus {
        let q = lcm(s.period(), l);
        let full = (1usize << l) - 1;
        let cost: Vec<ExtNat> = (0..=full)
            .map(|a| {
                let bits: Vec<bool> = (p..p + q).map(|n| s.contains(n) && a >> (n % l) & 1 == 1).collect();
                if bits.iter().all(|&b| !b) {
                    ExtNat::ZERO
                } else {
                    cyclic_max_run(&bits)
                }
            })
            .collect();
        // layers[k][a]: cheapest split of residue set `a` into at most k+1 pieces
        let mut layers = vec![cost.clone()];
        let mut choice: Vec<Vec<usize>> = vec![(0..=full).collect()];
        for _ in 1..max_parts {
            let prev = layers.last().unwrap();
            let mut layer = prev.clone();
            let mut pick: Vec<usize> = vec![0; full + 1];
            for a in 0..=full {
                let mut b = a;
                while b > 0 {
                    let c = cost[b] + prev[a & !b];
                    if c < layer[a] {
                        layer[a] = c;
                        pick[a] = b;
                    }
                    b = (b - 1) & a;
                }
            }
            layers.push(layer);
            choice.push(pick);
        }
        let total = layers[max_parts - 1][full];
        if total < best.total {
            let mut parts = Vec::new();
            let mut rest = full;
            for k in (0..max_parts).rev() {
                let piece = if k == 0 { rest } else { choice[k][rest] };
                if piece != 0 {
                    parts.push(piece);
                    rest &= !piece;
                }
                if rest == 0 {
                    break;
                }
            }
            let parts =
                parts.into_iter().map(|a| EpSet::from_fn(p, q, |n| s.contains(n) && a >> (n % l) & 1 == 1)).collect();
            best = CoverSearch { parts, total, modulus: l };
        }
    }
    best
}

/// Splits an infinite `S` into `k` disjoint infinite ep-sets.
///
/// Runs of maximal recurring length are numbered along the periodic part and
/// dealt out round-robin, so every part keeps `coGap(S)`. Everything else
/// goes to the first part. A cofinite `S` is dealt out by residue.
pub fn inn_cogap_witness(s: &EpSet, k: usize) -> Result<Vec<EpSet>> {
    if s.is_finite() {
        return Err(Error::FiniteSet);
    }
    if k == 0 {
        return Err(Error::ZeroParts);
    }
    if k == 1 {
        return Ok(vec![s.clone()]);
    }
    let (p, q) = (s.preperiod(), s.period());
    if s.is_cofinite() {
        return Ok((0..k)
            .map(|i| EpSet::from_fn(p, k, |n| if n < p { i == 0 && s.contains(n) } else { (n - p) % k == i }))
            .collect());
    }
    let start = p + s.pattern().iter().position(|&b| !b).unwrap();
    let c = match s.cogap() {
        ExtNat::Fin(c) => c as usize,
        ExtNat::Inf => unreachable!("not cofinite"),
    };
    // run index within a block for offsets lying in a maximal-length run
    let mut run_of = vec![None; q];
    let mut runs = 0;
    let mut off = 0;
    while off < q {
        if s.contains(start + off) {
            let len = (off..q).take_while(|&o| s.contains(start + o)).count();
            if len == c {
                run_of[off..off + len].fill(Some(runs));
                runs += 1;
            }
            off += len;
        } else {
            off += 1;
        }
    }
    let part_of = |n: usize| -> usize {
        if n < start {
            return 0;
        }
        let (block, off) = ((n - start) / q, (n - start) % q);
        run_of[off].map_or(0, |t| (block * runs + t) % k)
    };
    Ok((0..k).map(|i| EpSet::from_fn(start, q * k, |n| s.contains(n) && part_of(n) == i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(s: &str) -> EpSet {
        s.parse().unwrap()
    }

    #[test]
    fn named_family_membership() {
        assert!(in_g(&EpSet::evens()) && !in_h(&EpSet::evens()));
        let co3 = EpSet::naturals().toggled(&[3]);
        assert!(in_g(&co3) && in_h(&co3));
    }

    #[test]
    fn probes() {
        assert!(finitely_insensitive_probe(EpSet::gap, &EpSet::evens(), &[1]));
        assert!(finitely_insensitive_probe(EpSet::cogap, &EpSet::naturals(), &[0, 1, 2]));
        let h = |s: &EpSet| ExtNat::indicator(in_h(s));
        assert!(finitely_insensitive_probe(h, &ep("01(011)"), &[0, 4, 9]));
    }

    #[test]
    fn even_odd_examples() {
        assert_eq!(even_odd_split(&EpSet::naturals()), (EpSet::evens(), EpSet::odds()));
        let (e, o) = even_odd_split(&EpSet::evens());
        assert_eq!((e.cogap(), o.cogap()), (ExtNat::ONE, ExtNat::ZERO));
        let (e, o) = even_odd_split(&EpSet::finite([1, 2, 3]));
        assert!(e.is_finite() && o.is_finite());
    }

    #[test]
    fn out_cogap_values() {
        assert_eq!(out_cogap(&ep("(111110)")), ExtNat::Fin(2));
        assert_eq!(out_cogap(&EpSet::evens()), ExtNat::ONE);
        assert_eq!(out_cogap(&EpSet::finite([4])), ExtNat::ZERO);
    }

    #[test]
    fn residue_search_finds_even_odd_cover() {
        let s = ep("(111110)");
        let found = residue_cover_search(&s, 3, 6);
        assert_eq!(found.total, ExtNat::Fin(2));
        let union = found.parts.iter().fold(EpSet::empty(), |acc, x| acc.union(x));
        assert_eq!(union, s);
        assert_eq!(residue_cover_search(&EpSet::evens(), 3, 6).total, ExtNat::ONE);
    }

    #[test]
    fn witness_examples() {
        for (s, k) in [(EpSet::naturals(), 2), (EpSet::evens(), 3), (ep("1(0111001)"), 4)] {
            let parts = inn_cogap_witness(&s, k).unwrap();
            assert_eq!(parts.len(), k);
            let union = parts.iter().fold(EpSet::empty(), |acc, x| acc.union(x));
            assert_eq!(union, s);
            for (i, a) in parts.iter().enumerate() {
                assert!(!a.is_finite());
                assert!(a.cogap() >= ExtNat::ONE);
                for b in &parts[i + 1..] {
                    assert_eq!(a.intersect(b), EpSet::empty());
                }
            }
        }
        assert_eq!(inn_cogap_witness(&EpSet::evens(), 1).unwrap(), vec![EpSet::evens()]);
        assert_eq!(inn_cogap_witness(&EpSet::finite([1]), 2), Err(Error::FiniteSet));
        assert_eq!(inn_cogap_witness(&EpSet::evens(), 0), Err(Error::ZeroParts));
    }

    #[test]
    fn diagnostic_disagrees_on_early_gap() {
        let d = cogap_diagnostic(&ep("10000001(1)"));
        assert!(!d.agree);
        assert!(cogap_diagnostic(&EpSet::evens()).agree);
    }
}
