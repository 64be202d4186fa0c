use proptest::prelude::*;
use setfam::natep::{even_odd_split, in_g, in_h, inn_cogap_witness, out_cogap, residue_cover_search};
use setfam::{EpSet, ExtNat};

/// Raw, possibly non-canonical prefix/pattern pairs.
fn raw() -> impl Strategy<Value = (Vec<bool>, Vec<bool>)> {
    (prop::collection::vec(any::<bool>(), 0..12), prop::collection::vec(any::<bool>(), 1..9))
}

fn member(prefix: &[bool], pattern: &[bool], n: usize) -> bool {
    if n < prefix.len() {
        prefix[n]
    } else {
        pattern[(n - prefix.len()) % pattern.len()]
    }
}

/// Largest gap between consecutive `wanted` positions, counting only gaps
/// whose left end is past the preperiod, over a long simulated window.
fn windowed_gap(prefix: &[bool], pattern: &[bool], wanted: bool) -> ExtNat {
    let (p, q) = (prefix.len(), pattern.len());
    let window = 1000.max(p + 20 * q);
    let hits: Vec<usize> = (0..window).filter(|&n| member(prefix, pattern, n) == wanted).collect();
    if !hits.iter().any(|&n| n >= p) {
        return ExtNat::Inf;
    }
    let widest = hits.windows(2).filter(|w| w[0] >= p).map(|w| w[1] - w[0] - 1).max().unwrap_or(0);
    ExtNat::Fin(widest as u32)
}

fn ep((prefix, pattern): (Vec<bool>, Vec<bool>)) -> EpSet {
    EpSet::new(prefix, pattern).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gap_and_cogap_match_window((prefix, pattern) in raw()) {
        let s = EpSet::new(prefix.clone(), pattern.clone()).unwrap();
        prop_assert_eq!(s.gap(), windowed_gap(&prefix, &pattern, true));
        prop_assert_eq!(s.cogap(), windowed_gap(&prefix, &pattern, false));
    }

    #[test]
    fn canonical_form_preserves_membership((prefix, pattern) in raw()) {
        let s = EpSet::new(prefix.clone(), pattern.clone()).unwrap();
        for n in 0..200 {
            prop_assert_eq!(s.contains(n), member(&prefix, &pattern, n));
        }
        let again = EpSet::new(s.prefix().to_vec(), s.pattern().to_vec()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(s.to_string().parse::<EpSet>().unwrap(), s);
    }

    #[test]
    fn boolean_ops_are_pointwise(a in raw(), b in raw()) {
        let (s, t) = (ep(a), ep(b));
        let (u, i, c) = (s.union(&t), s.intersect(&t), s.complement());
        for n in 0..200 {
            prop_assert_eq!(u.contains(n), s.contains(n) || t.contains(n));
            prop_assert_eq!(i.contains(n), s.contains(n) && t.contains(n));
            prop_assert_eq!(c.contains(n), !s.contains(n));
        }
        prop_assert_eq!(s.is_finite(), (0..200).all(|n| n < s.preperiod() || !s.contains(n)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gap_and_cogap_ignore_finite_toggles(a in raw(), toggles in prop::collection::vec(0usize..40, 0..=5)) {
        let s = ep(a);
        let t = s.toggled(&toggles);
        prop_assert_eq!(s.gap(), t.gap());
        prop_assert_eq!(s.cogap(), t.cogap());
        prop_assert_eq!(in_g(&s), in_g(&t));
        prop_assert_eq!(in_h(&s), in_h(&t));
    }

    #[test]
    fn gap_decreases_and_cogap_increases(a in raw(), b in raw()) {
        let (s, t) = (ep(a), ep(b));
        let big = s.union(&t);
        prop_assert!(s.is_subset(&big));
        prop_assert!(big.gap() <= s.gap());
        prop_assert!(s.cogap() <= big.cogap());
    }

    #[test]
    fn g_and_h_are_associated(a in raw()) {
        let s = ep(a);
        prop_assert_eq!(in_g(&s), !in_h(&s.complement()));
    }

    #[test]
    fn even_odd_parts_have_short_runs(a in raw()) {
        let s = ep(a);
        let (e, o) = even_odd_split(&s);
        prop_assert_eq!(e.union(&o), s.clone());
        prop_assert_eq!(e.intersect(&o), EpSet::empty());
        prop_assert!(e.cogap() <= ExtNat::ONE && o.cogap() <= ExtNat::ONE);
        if !s.is_finite() {
            prop_assert!(e.cogap() + o.cogap() <= ExtNat::Fin(2));
        }
    }

    #[test]
    fn witness_parts_partition_infinite_sets(a in raw(), k in 1usize..=5) {
        let s = ep(a);
        prop_assume!(!s.is_finite());
        let parts = inn_cogap_witness(&s, k).unwrap();
        prop_assert_eq!(parts.len(), k);
        let union = parts.iter().fold(EpSet::empty(), |acc, x| acc.union(x));
        prop_assert_eq!(union, s.clone());
        for (i, x) in parts.iter().enumerate() {
            prop_assert!(!x.is_finite());
            prop_assert!(x.cogap() >= ExtNat::ONE);
            for y in &parts[i + 1..] {
                prop_assert_eq!(x.intersect(y), EpSet::empty());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn residue_covers_never_beat_out_cogap(a in raw()) {
        let s = ep(a);
        let found = residue_cover_search(&s, 3, 8);
        prop_assert!(found.total >= out_cogap(&s));
        let union = found.parts.iter().fold(EpSet::empty(), |acc, x| acc.union(x));
        prop_assert_eq!(union, s.clone());
        let sum: ExtNat = found.parts.iter().map(EpSet::cogap).sum();
        prop_assert_eq!(sum, found.total);
    }
}
