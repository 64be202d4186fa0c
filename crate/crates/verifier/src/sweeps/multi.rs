//! Sweeps over increasing multi-families: push inequalities for the outer
//! core and inner hull, the dynamic programs against brute force, and the
//! level-set identity.

use rayon::prelude::*;
use serde_json::json;
use setfam::multifamilies::oracle::{inn_hull_direct, out_core_direct};
use setfam::multifamilies::{
    aso_level_identity, inn_hull, is_inner, is_outer, out_core, pairwise_inner, pairwise_outer, push_multifamily,
};
use setfam::{ExtNat, FiniteMap, MultiFamily, Universe};

use super::ScopeConfig;
use crate::error::VerifierError;
use crate::report::{Check, Tally};
use crate::sample::{all_increasing, random_increasing, stream, VALUES};
use crate::shrink::shrink_multifamily;

fn samples(u: &Universe, count: usize, seed: u64, label: &str) -> Vec<MultiFamily> {
    let mut rng = stream(seed, label);
    (0..count).map(|_| random_increasing(u, &mut rng)).collect()
}

/// Runs `fails` over every map `X → Y` (|Y| ∈ {2, 3}) and every sample,
/// shrinking the first failure.
fn map_sweep(
    cfg: &ScopeConfig,
    label: &str,
    default_samples: usize,
    fails: impl Fn(&FiniteMap, &MultiFamily) -> Result<bool, setfam::Error> + Sync,
) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    let n = cfg.n.unwrap_or(3);
    let x = Universe::letters(n)?;
    let ms = samples(&x, cfg.samples_or(default_samples), cfg.seed, label);
    for m in [2, 3] {
        let y = Universe::indexed(m)?;
        for f in FiniteMap::all(&x, &y) {
            let checks: Vec<Check> = ms
                .par_iter()
                .map(|mf| match fails(&f, mf) {
                    Ok(false) => Ok(()),
                    Ok(true) => {
                        let small = shrink_multifamily(mf, |c| fails(&f, c).unwrap_or(false));
                        Err(json!({ "map": f.images(), "codomain": y, "multifamily": small }))
                    }
                    Err(e) => Err(json!({ "map": f.images(), "multifamily": mf, "error": e.to_string() })),
                })
                .collect();
            tally.absorb(checks);
        }
    }
    Ok(tally)
}

/// `Out(f*M) ≥ f*(Out M)`.
pub fn prop_ia(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    map_sweep(cfg, "prop-ia", 200, |f, m| {
        let lhs = out_core(&push_multifamily(f, m)?)?;
        let rhs = push_multifamily(f, &out_core(m)?)?;
        Ok(!rhs.le(&lhs))
    })
}

/// `Inn(f*M) ≤ f*(Inn M)`.
pub fn prop_ib(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    map_sweep(cfg, "prop-ib", 200, |f, m| {
        let lhs = inn_hull(&push_multifamily(f, m)?)?;
        let rhs = push_multifamily(f, &inn_hull(m)?)?;
        Ok(!lhs.le(&rhs))
    })
}

/// Pushes of outer cores stay outer and pushes of inner hulls stay inner.
pub fn push_out_inn(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    map_sweep(cfg, "push-out-inn", 100, |f, m| {
        let outer = is_outer(&push_multifamily(f, &out_core(m)?)?)?;
        let inner = is_inner(&push_multifamily(f, &inn_hull(m)?)?)?;
        Ok(!(outer && inner))
    })
}

fn dp_failure(m: &MultiFamily) -> Option<&'static str> {
    let out = out_core(m).ok()?;
    let inn = inn_hull(m).ok()?;
    if out != out_core_direct(m) {
        return Some("out_core differs from cover oracle");
    }
    if inn != inn_hull_direct(m) {
        return Some("inn_hull differs from partition oracle");
    }
    if !(out.le(m) && m.le(&inn)) {
        return Some("out_core <= M <= inn_hull violated");
    }
    if out_core(&out).ok()? != out || inn_hull(&inn).ok()? != inn {
        return Some("not idempotent");
    }
    if is_outer(m).ok()? != pairwise_outer(m) {
        return Some("is_outer disagrees with pairwise subadditivity");
    }
    if is_inner(m).ok()? != pairwise_inner(m) {
        return Some("is_inner disagrees with pairwise superadditivity");
    }
    None
}

fn exhaustive_then_sampled(
    cfg: &ScopeConfig,
    label: &str,
    default_samples: usize,
) -> Result<Vec<MultiFamily>, VerifierError> {
    let x2 = Universe::letters(2)?;
    let x3 = Universe::letters(3)?;
    let mut all = all_increasing(&x2, &VALUES);
    all.extend(samples(&x3, cfg.samples_or(default_samples), cfg.seed, label));
    Ok(all)
}

pub fn out_inn_dp(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    let ms = exhaustive_then_sampled(cfg, "out-inn-dp", 1000)?;
    let outer = ms.iter().filter(|m| is_outer(m).unwrap_or(false)).count();
    let inner = ms.iter().filter(|m| is_inner(m).unwrap_or(false)).count();
    tally.note("outer_inputs", outer as u64);
    tally.note("inner_inputs", inner as u64);
    let checks: Vec<Check> = ms
        .par_iter()
        .map(|m| match dp_failure(m) {
            None => Ok(()),
            Some(reason) => {
                let small = shrink_multifamily(m, |c| dp_failure(c) == Some(reason));
                Err(json!({ "multifamily": small, "reason": reason }))
            }
        })
        .collect();
    tally.absorb(checks);
    Ok(tally)
}

pub fn level_set_aso(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    let ms = exhaustive_then_sampled(cfg, "level-set-aso", 500)?;
    let checks: Vec<Check> = ms
        .par_iter()
        .map(|m| {
            for level in 0..=3 {
                let level = ExtNat::Fin(level);
                if !aso_level_identity(m, level).unwrap_or(false) {
                    let small = shrink_multifamily(m, |c| !aso_level_identity(c, level).unwrap_or(true));
                    return Err(json!({ "multifamily": small, "level": level }));
                }
            }
            Ok(())
        })
        .collect();
    tally.absorb(checks);
    Ok(tally)
}
