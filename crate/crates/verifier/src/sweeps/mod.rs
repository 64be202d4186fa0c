//! Registered proposition sweeps.
//!
//! Each sweep has a default scope large enough for the acceptance criteria;
//! `n` narrows or widens the universe size where that makes sense and
//! `samples` replaces the default sample count of sampled scopes.

mod families;
mod limits;
mod multi;
mod natep;

use std::time::Instant;

use serde::Serialize;

use crate::enumerate::ENUMERATION_MAX;
use crate::error::VerifierError;
use crate::report::{SweepReport, Tally};

pub const DEFAULT_SEED: u64 = 0x5e7f_a111;

pub const SWEEP_IDS: [&str; 19] = [
    "simple-observ",
    "aso-involution",
    "push-aso-commute",
    "prop-ia",
    "prop-ib",
    "prop-ii",
    "prop-iii",
    "prop-ii-star",
    "thm-lim",
    "cor-inn-seq",
    "inner-unique-limit",
    "prop-flt",
    "level-set-aso",
    "push-out-inn",
    "cogap-formula",
    "rerere-analog",
    "out-inn-dp",
    "outer-inner-bridge",
    "product-self-aso",
];

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScopeConfig {
    pub n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for ScopeConfig {
    fn default() -> Self {
        ScopeConfig { n: None, samples: None, seed: DEFAULT_SEED }
    }
}

impl ScopeConfig {
    pub(crate) fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    /// `n` alone if given, otherwise the default sizes.
    pub(crate) fn sizes_or(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    /// `1..=n` if given, otherwise `1..=default_max`.
    pub(crate) fn up_to(&self, default_max: usize) -> Vec<usize> {
        (1..=self.n.unwrap_or(default_max)).collect()
    }
}

pub fn run_sweep(id: &str, cfg: &ScopeConfig) -> Result<SweepReport, VerifierError> {
    if !SWEEP_IDS.contains(&id) {
        return Err(VerifierError::UnknownSweep(id.to_string()));
    }
    if let Some(n) = cfg.n {
        if n == 0 || n > ENUMERATION_MAX {
            return Err(VerifierError::SizeCap { n, max: ENUMERATION_MAX });
        }
    }
    let start = Instant::now();
    let tally: Tally = match id {
        "simple-observ" => families::simple_observ(cfg)?,
        "aso-involution" => families::aso_involution(cfg)?,
        "push-aso-commute" => families::push_aso_commute(cfg)?,
        "prop-flt" => families::prop_flt(cfg)?,
        "outer-inner-bridge" => families::outer_inner_bridge(cfg)?,
        "product-self-aso" => families::product_self_aso(cfg)?,
        "prop-ia" => multi::prop_ia(cfg)?,
        "prop-ib" => multi::prop_ib(cfg)?,
        "out-inn-dp" => multi::out_inn_dp(cfg)?,
        "level-set-aso" => multi::level_set_aso(cfg)?,
        "push-out-inn" => multi::push_out_inn(cfg)?,
        "prop-ii" => limits::prop_ii(cfg)?,
        "prop-iii" => limits::prop_iii(cfg)?,
        "prop-ii-star" => limits::prop_ii_star(cfg)?,
        "thm-lim" => limits::thm_lim(cfg)?,
        "inner-unique-limit" => limits::inner_unique_limit(cfg)?,
        "cor-inn-seq" => limits::cor_inn_seq(cfg)?,
        "cogap-formula" => natep::cogap_formula(cfg)?,
        "rerere-analog" => natep::rerere_analog(cfg)?,
        _ => unreachable!("id checked against the registry"),
    };
    Ok(SweepReport {
        id: id.to_string(),
        instances: tally.instances,
        passed: tally.passed,
        counterexample: tally.counterexample,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed: cfg.seed,
        observations: tally.observations,
    })
}

/// Every registered sweep at its default scope with the given seed.
pub fn run_all(seed: u64) -> Result<Vec<SweepReport>, VerifierError> {
    let cfg = ScopeConfig { seed, ..ScopeConfig::default() };
    SWEEP_IDS.iter().map(|id| run_sweep(id, &cfg)).collect()
}
