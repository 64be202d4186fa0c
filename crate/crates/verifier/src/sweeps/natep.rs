//! Sweeps over eventually periodic subsets of `ℕ` and sequences into finite
//! spaces.

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;
use setfam::natep::{
    cogap_diagnostic, even_odd_split, finitely_insensitive_probe, in_g, in_h, inn_cogap_witness, out_cogap,
    residue_cover_search, seq_limit, EpSequence, NamedFamily,
};
use setfam::{EpSet, ExtNat, FiniteTopology, Universe};

use super::ScopeConfig;
use crate::error::VerifierError;
use crate::oracle::windowed_gap;
use crate::report::{Check, Tally};
use crate::sample::{random_ep_bits, random_epset, random_toggles, stream};

/// Longest period allowed in the residue-class cover search.
pub const COVER_MODULUS: usize = 12;
/// Most parts allowed in the residue-class cover search.
pub const COVER_PARTS: usize = 3;

fn fail(what: &str, s: &EpSet, extra: serde_json::Value) -> Check {
    Err(json!({ "check": what, "set": s, "detail": extra }))
}

pub fn cogap_formula(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    let seed = cfg.seed;

    let mut rng = stream(seed, "cogap-window");
    let raws: Vec<_> = (0..cfg.samples_or(500)).map(|_| random_ep_bits(&mut rng)).collect();
    for (prefix, pattern) in &raws {
        let s = EpSet::new(prefix.clone(), pattern.clone())?;
        let (g, c) = (windowed_gap(prefix, pattern, true), windowed_gap(prefix, pattern, false));
        tally.record(if s.gap() == g && s.cogap() == c {
            Ok(())
        } else {
            fail("window", &s, json!({ "gap": s.gap(), "window_gap": g, "cogap": s.cogap(), "window_cogap": c }))
        });
        if !cogap_diagnostic(&s).agree {
            tally.note("max_gap_anywhere_disagrees_with_cogap", 1);
        }
        tally.record(if in_g(&s) == !in_h(&s.complement()) { Ok(()) } else { fail("g-h-associate", &s, json!(null)) });
    }

    let mut rng = stream(seed, "cogap-toggle");
    for _ in 0..cfg.samples_or(200) {
        let s = random_epset(&mut rng);
        let toggles = random_toggles(&mut rng, 5);
        let ok = finitely_insensitive_probe(EpSet::gap, &s, &toggles)
            && finitely_insensitive_probe(EpSet::cogap, &s, &toggles)
            && finitely_insensitive_probe(|t| ExtNat::indicator(in_h(t)), &s, &toggles);
        tally.record(if ok { Ok(()) } else { fail("toggle", &s, json!({ "toggles": toggles })) });
    }

    let mut rng = stream(seed, "cogap-split");
    for _ in 0..cfg.samples_or(200) {
        let s = random_epset(&mut rng);
        let (e, o) = even_odd_split(&s);
        let ok = e.union(&o) == s
            && e.intersect(&o) == EpSet::empty()
            && e.cogap() <= ExtNat::ONE
            && o.cogap() <= ExtNat::ONE
            && (s.is_finite() || e.cogap() + o.cogap() <= ExtNat::Fin(2));
        tally.record(if ok { Ok(()) } else { fail("even-odd", &s, json!({ "even": e, "odd": o })) });
    }

    let mut rng = stream(seed, "cogap-cover");
    let covers: Vec<EpSet> = (0..cfg.samples_or(200)).map(|_| random_epset(&mut rng)).collect();
    let checks: Vec<(Check, bool)> = covers
        .par_iter()
        .map(|s| {
            let closed = out_cogap(s);
            let found = residue_cover_search(s, COVER_PARTS, COVER_MODULUS);
            let union = found.parts.iter().fold(EpSet::empty(), |acc, p| acc.union(p));
            let sum: ExtNat = found.parts.iter().map(EpSet::cogap).sum();
            let ok = closed == s.cogap().min(ExtNat::Fin(2)) && found.total >= closed && union == *s && sum == found.total;
            let check = if ok {
                Ok(())
            } else {
                fail("cover", s, json!({ "out_cogap": closed, "cover_total": found.total, "modulus": found.modulus, "parts": found.parts }))
            };
            (check, found.total == closed)
        })
        .collect();
    tally.note("covers_attaining_closed_form", checks.iter().filter(|(_, t)| *t).count() as u64);
    tally.absorb(checks.into_iter().map(|(c, _)| c));

    let mut rng = stream(seed, "cogap-witness");
    let mut done = 0;
    while done < cfg.samples_or(100) {
        let s = random_epset(&mut rng);
        if s.is_finite() {
            continue;
        }
        done += 1;
        let k = rng.gen_range(1..=5);
        let parts = inn_cogap_witness(&s, k)?;
        let union = parts.iter().fold(EpSet::empty(), |acc, p| acc.union(p));
        let disjoint =
            parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| a.intersect(b) == EpSet::empty()));
        let ok = parts.len() == k
            && union == s
            && disjoint
            && parts.iter().all(|p| !p.is_finite() && p.cogap() >= ExtNat::ONE);
        tally.record(if ok { Ok(()) } else { fail("witness", &s, json!({ "k": k, "parts": parts })) });
    }
    Ok(tally)
}

fn expect(tally: &mut Tally, what: &str, got: &[ExtNat], want: &[ExtNat]) {
    tally.record(if got == want { Ok(()) } else { Err(json!({ "check": what, "got": got, "expected": want })) });
}

/// Sequence limits that separate `coGap`-limits from ordinary limits, in a
/// finite discrete space.
pub fn rerere_analog(_cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    use ExtNat::{Fin, Inf};
    let mut tally = Tally::default();
    let ab = Universe::letters(2)?;
    let abc = Universe::letters(3)?;
    let d2 = FiniteTopology::discrete(&ab);
    let d3 = FiniteTopology::discrete(&abc);

    let constant = EpSequence::constant(&ab, 0)?;
    let lim = seq_limit(&constant, &d2, NamedFamily::CoGap)?;
    expect(&mut tally, "constant cogap-limit", lim.multiplicities(), &[Inf, Fin(0)]);
    let constant3 = EpSequence::constant(&abc, 1)?;
    let lim = seq_limit(&constant3, &d3, NamedFamily::CoGap)?;
    expect(&mut tally, "constant cogap-limit on three points", lim.multiplicities(), &[Fin(0), Inf, Fin(0)]);

    let alternating = EpSequence::new(&ab, vec![], vec![0, 1])?;
    let lim = seq_limit(&alternating, &d2, NamedFamily::CoGap)?;
    expect(&mut tally, "alternating cogap-limit", lim.multiplicities(), &[Fin(1), Fin(1)]);
    let lim = seq_limit(&alternating, &d2, NamedFamily::H)?;
    expect(&mut tally, "alternating H-limit", lim.multiplicities(), &[Fin(0), Fin(0)]);
    let lim = seq_limit(&alternating, &d2, NamedFamily::G)?;
    expect(&mut tally, "alternating G-limit", lim.multiplicities(), &[Fin(1), Fin(1)]);

    // eventually constant after a detour: the ordinary limit exists and agrees
    let settles = EpSequence::new(&ab, vec![1, 1, 1], vec![0])?;
    let lim = seq_limit(&settles, &d2, NamedFamily::H)?;
    expect(&mut tally, "eventually constant H-limit", lim.multiplicities(), &[Fin(1), Fin(0)]);
    Ok(tally)
}
