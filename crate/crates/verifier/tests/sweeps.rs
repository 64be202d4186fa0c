use setfam::{Family, Universe};
use setfam_verifier::sweeps::DEFAULT_SEED;
use setfam_verifier::{census, enumerate_families, run_sweep, FamilyFilter, ScopeConfig, SWEEP_IDS};

fn scope(n: Option<usize>, samples: Option<usize>) -> ScopeConfig {
    ScopeConfig { n, samples, seed: DEFAULT_SEED }
}

#[test]
fn aso_involution_on_three_points() {
    let r = run_sweep("aso-involution", &scope(Some(3), None)).unwrap();
    assert_eq!((r.passed, r.instances), (256, 256));
    assert_eq!(r.observations["comparable_pairs_n3"], 3u64.pow(8));
}

#[test]
fn eventual_enumeration_matches_brute_force() {
    for n in 1..=4 {
        let fast = enumerate_families(n, FamilyFilter::Eventual).unwrap();
        let slow: Vec<Family> =
            enumerate_families(n, FamilyFilter::All).unwrap().into_iter().filter(Family::is_eventual).collect();
        assert_eq!(fast, slow, "n = {n}");
    }
    assert_eq!(enumerate_families(3, FamilyFilter::Eventual).unwrap().len(), 20);
    assert_eq!(enumerate_families(3, FamilyFilter::All).unwrap().len(), 256);
}

#[test]
fn self_aso_eventual_on_two_points() {
    let u = Universe::letters(2).unwrap();
    let found = enumerate_families(2, FamilyFilter::SelfAsoEventual).unwrap();
    assert!(found.contains(&Family::principal(&u, 0)) && found.contains(&Family::principal(&u, 1)));
    assert!(found.iter().all(|f| f.aso() == *f));
}

#[test]
fn census_examples() {
    assert_eq!(census(1).unwrap().counts["ultrafilter"], 1);
    assert_eq!(census(2).unwrap().counts["ultrafilter"], 2);
    let four = census(4).unwrap();
    assert_eq!(four.total, 65536);
    assert_eq!(four.counts["eventual"], 168);
    assert_eq!(four.counts["ultrafilter"], 4);
    assert!(four.all_assertions_hold());
    assert!(four.counts.values().all(|&c| c <= four.total));
}

#[test]
fn every_sweep_passes_a_small_scope() {
    for id in SWEEP_IDS {
        let r = run_sweep(id, &scope(None, Some(8))).unwrap();
        assert!(r.ok(), "{id}: {:?}", r.counterexample);
        assert!(r.instances > 0 && r.passed <= r.instances);
    }
}

#[test]
fn sampled_sweeps_are_reproducible() {
    for id in ["prop-ia", "thm-lim", "cor-inn-seq", "cogap-formula"] {
        let a = run_sweep(id, &scope(None, Some(10))).unwrap();
        let b = run_sweep(id, &scope(None, Some(10))).unwrap();
        assert_eq!((a.instances, &a.observations), (b.instances, &b.observations), "{id}");
        assert_eq!(a.seed, DEFAULT_SEED);
    }
}

#[test]
fn prop_ii_covers_every_topology() {
    let r = run_sweep("prop-ii", &scope(None, Some(100))).unwrap();
    assert!(r.ok());
    assert_eq!(r.observations["topologies_n3"], 29);
    assert_eq!(r.instances, (4 + 29) * 100);
}

#[test]
fn flt_holds_on_every_self_aso_eventual_family() {
    let r = run_sweep("prop-flt", &scope(None, None)).unwrap();
    assert!(r.ok());
    assert_eq!(r.instances, 1 + 2 + 4 + 12);
}
