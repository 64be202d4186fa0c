//! Sweeps over finite topologies: closure inequalities, limits under
//! continuous maps, and limits of eventually periodic sequences.
//!
//! A finite Hausdorff space is discrete, so the separated statements are
//! checked on the topologies that pass `is_hausdorff`, which are exactly the
//! discrete ones.

use rayon::prelude::*;
use serde_json::json;
use setfam::multifamilies::{inn_hull, multi_image, out_core, push_multifamily};
use setfam::natep::{seq_limit, seq_push, NamedFamily};
use setfam::topology::{
    all_topologies, closure_multifamily, is_continuous, limit_set, multiset_limit, unique_limit_inner,
};
use setfam::{push_family, FiniteMap, FiniteTopology, MultiFamily, SubsetMask, Universe};

use super::ScopeConfig;
use crate::enumerate::{enumerate_families, FamilyFilter};
use crate::error::VerifierError;
use crate::report::{Check, Tally};
use crate::sample::{random_increasing, random_sequence, stream};
use crate::shrink::shrink_multifamily;

fn samples(u: &Universe, count: usize, seed: u64, label: &str) -> Vec<MultiFamily> {
    let mut rng = stream(seed, label);
    (0..count).map(|_| random_increasing(u, &mut rng)).collect()
}

fn hausdorff(u: &Universe) -> Vec<FiniteTopology> {
    all_topologies(u).into_iter().filter(FiniteTopology::is_hausdorff).collect()
}

/// `Out(cl M) ≥ cl(Out M)` over every topology.
pub fn prop_ii(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[2, 3]) {
        let u = Universe::letters(n)?;
        let ms = samples(&u, cfg.samples_or(100), cfg.seed, &format!("prop-ii-{n}"));
        let tops = all_topologies(&u);
        tally.note(format!("topologies_n{n}"), tops.len() as u64);
        let fails = |t: &FiniteTopology, m: &MultiFamily| -> bool {
            let lhs = out_core(&closure_multifamily(m, t).unwrap()).unwrap();
            let rhs = closure_multifamily(&out_core(m).unwrap(), t).unwrap();
            !rhs.le(&lhs)
        };
        let checks: Vec<Check> = tops
            .par_iter()
            .flat_map_iter(|t| {
                ms.iter().map(move |m| {
                    if fails(t, m) {
                        Err(json!({ "topology": t, "multifamily": shrink_multifamily(m, |c| fails(t, c)) }))
                    } else {
                        Ok(())
                    }
                })
            })
            .collect();
        tally.absorb(checks);
    }
    Ok(tally)
}

/// `cl(f*M) ≥ f*(cl M)` for every continuous `f` between every pair of
/// topologies.
pub fn prop_iii(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[2, 3]) {
        let x = Universe::letters(n)?;
        let ms = samples(&x, cfg.samples_or(20), cfg.seed, &format!("prop-iii-{n}"));
        let tx_all = all_topologies(&x);
        for m in [2, 3] {
            let y = Universe::indexed(m)?;
            let ty_all = all_topologies(&y);
            let maps: Vec<FiniteMap> = FiniteMap::all(&x, &y).collect();
            let results: Vec<(u64, Vec<Check>)> = tx_all
                .par_iter()
                .map(|tx| {
                    let mut continuous = 0;
                    let mut checks = Vec::new();
                    for ty in &ty_all {
                        for f in maps.iter().filter(|f| is_continuous(f, tx, ty).unwrap()) {
                            continuous += 1;
                            let fails = |mf: &MultiFamily| {
                                let lhs = closure_multifamily(&push_multifamily(f, mf).unwrap(), ty).unwrap();
                                let rhs = push_multifamily(f, &closure_multifamily(mf, tx).unwrap()).unwrap();
                                !rhs.le(&lhs)
                            };
                            for mf in &ms {
                                checks.push(if fails(mf) {
                                    Err(json!({
                                        "from": tx, "to": ty, "map": f.images(),
                                        "multifamily": shrink_multifamily(mf, fails),
                                    }))
                                } else {
                                    Ok(())
                                });
                            }
                        }
                    }
                    (continuous, checks)
                })
                .collect();
            for (continuous, checks) in results {
                tally.note("continuous_maps", continuous);
                tally.absorb(checks);
            }
        }
    }
    Ok(tally)
}

/// `Inn(cl M) ≤ cl(Inn M)` on Hausdorff spaces.
pub fn prop_ii_star(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.up_to(3) {
        let u = Universe::letters(n)?;
        let tops = hausdorff(&u);
        tally.note(format!("hausdorff_topologies_n{n}"), tops.len() as u64);
        let ms = samples(&u, cfg.samples_or(200), cfg.seed, &format!("prop-ii-star-{n}"));
        for t in &tops {
            let fails = |m: &MultiFamily| {
                let lhs = inn_hull(&closure_multifamily(m, t).unwrap()).unwrap();
                let rhs = closure_multifamily(&inn_hull(m).unwrap(), t).unwrap();
                !lhs.le(&rhs)
            };
            let checks: Vec<Check> = ms
                .par_iter()
                .map(|m| {
                    if fails(m) {
                        Err(json!({ "topology": t, "multifamily": shrink_multifamily(m, fails) }))
                    } else {
                        Ok(())
                    }
                })
                .collect();
            tally.absorb(checks);
        }
    }
    Ok(tally)
}

/// `lim(f*M) ≥ multi-f(lim M)` for inner `M` and continuous `f` between
/// Hausdorff spaces. Strict inequalities are counted, not required.
pub fn thm_lim(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[2, 3]) {
        let x = Universe::letters(n)?;
        let inner: Vec<MultiFamily> = samples(&x, cfg.samples_or(100), cfg.seed, &format!("thm-lim-{n}"))
            .iter()
            .map(|m| inn_hull(m).unwrap())
            .collect();
        for tx in hausdorff(&x) {
            for k in [2, 3] {
                let y = Universe::indexed(k)?;
                for ty in hausdorff(&y) {
                    for f in FiniteMap::all(&x, &y).filter(|f| is_continuous(f, &tx, &ty).unwrap()) {
                        let results: Vec<(Check, bool)> = inner
                            .par_iter()
                            .map(|m| {
                                let lhs = multiset_limit(&push_multifamily(&f, m).unwrap(), &ty).unwrap();
                                let rhs = multi_image(&f, &multiset_limit(m, &tx).unwrap()).unwrap();
                                if rhs.le(&lhs) {
                                    (Ok(()), lhs != rhs)
                                } else {
                                    (Err(json!({ "from": tx, "to": ty, "map": f.images(), "multifamily": m })), false)
                                }
                            })
                            .collect();
                        tally.note("strict", results.iter().filter(|(_, s)| *s).count() as u64);
                        tally.absorb(results.into_iter().map(|(c, _)| c));
                    }
                }
            }
        }
    }
    Ok(tally)
}

/// At most one limit point for an inner eventual family in a Hausdorff
/// space; an existing limit is carried to `f(limit)` by every continuous map.
pub fn inner_unique_limit(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.up_to(4) {
        let x = Universe::letters(n)?;
        let fams = enumerate_families(n, FamilyFilter::InnerEventual)?;
        tally.note(format!("inner_eventual_n{n}"), fams.len() as u64);
        for t in hausdorff(&x) {
            for fam in &fams {
                let lim = match unique_limit_inner(fam, &t) {
                    Ok(lim) => lim,
                    Err(e) => {
                        tally.record(Err(json!({ "family": fam, "topology": t, "error": e.to_string() })));
                        continue;
                    }
                };
                tally.record(Ok(()));
                let Some(point) = lim else { continue };
                tally.note("with_limit", 1);
                for k in 1..=3 {
                    let y = Universe::indexed(k)?;
                    for ty in hausdorff(&y) {
                        for f in FiniteMap::all(&x, &y).filter(|f| is_continuous(f, &t, &ty).unwrap()) {
                            let pushed = push_family(&f, fam)?;
                            let got = limit_set(&pushed, &ty)?;
                            tally.record(if got == SubsetMask::singleton(f.apply(point)) {
                                Ok(())
                            } else {
                                Err(json!({ "family": fam, "map": f.images(), "limit": point, "pushed_limit_set": y.labels_of(got) }))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(tally)
}

/// `M-lim f(x_n) ≥ multi-f(M-lim x_n)` for the inner named families on `ℕ`.
pub fn cor_inn_seq(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[2, 3]) {
        let x = Universe::letters(n)?;
        let mut rng = stream(cfg.seed, &format!("cor-inn-seq-{n}"));
        let seqs: Vec<_> = (0..cfg.samples_or(100)).map(|_| random_sequence(&x, &mut rng)).collect();
        let tx = FiniteTopology::discrete(&x);
        for k in [2, 3] {
            let y = Universe::indexed(k)?;
            let ty = FiniteTopology::discrete(&y);
            let maps: Vec<FiniteMap> = FiniteMap::all(&x, &y).collect();
            for fam in [NamedFamily::H, NamedFamily::InnCoGap] {
                let results: Vec<(Check, bool)> = seqs
                    .par_iter()
                    .flat_map_iter(|s| {
                        let base = seq_limit(s, &tx, fam).unwrap();
                        let via_push = multiset_limit(&seq_push(s, fam), &tx).unwrap();
                        let maps = &maps;
                        let ty = &ty;
                        let consistent = base == via_push;
                        maps.iter().map(move |f| {
                            let lhs = seq_limit(&s.compose(f).unwrap(), ty, fam).unwrap();
                            let rhs = multi_image(f, &base).unwrap();
                            if consistent && rhs.le(&lhs) {
                                (Ok(()), lhs != rhs)
                            } else {
                                (Err(json!({ "sequence": s, "map": f.images(), "family": fam.name(), "consistent_with_push": consistent })), false)
                            }
                        })
                    })
                    .collect();
                tally.note("strict", results.iter().filter(|(_, s)| *s).count() as u64);
                tally.absorb(results.into_iter().map(|(c, _)| c));
            }
        }
    }
    Ok(tally)
}
