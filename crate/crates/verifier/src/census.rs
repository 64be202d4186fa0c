//! Species counts over every family on a small universe.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use setfam::{Family, SpeciesReport};

use crate::enumerate::{enumerate_families, FamilyFilter};
use crate::error::VerifierError;

#[derive(Clone, Debug, Serialize)]
pub struct CensusTable {
    pub n: usize,
    pub total: u64,
    pub counts: BTreeMap<String, u64>,
    /// Self-associated versus filter, over all families.
    pub cross_tab: BTreeMap<String, u64>,
    /// Named assertions and whether they held.
    pub assertions: BTreeMap<String, bool>,
}

impl CensusTable {
    pub fn all_assertions_hold(&self) -> bool {
        self.assertions.values().all(|&b| b)
    }
}

fn species_keys(r: &SpeciesReport) -> Vec<&'static str> {
    let mut keys = Vec::new();
    let flags = [
        (r.eventual, "eventual"),
        (r.co_eventual, "co_eventual"),
        (r.filter, "filter"),
        (r.filter && r.proper, "proper_filter"),
        (r.ultrafilter, "ultrafilter"),
        (r.self_aso, "self_aso"),
        (r.self_aso && r.eventual, "self_aso_eventual"),
        (r.condition_o == Some(true), "outer_eventual"),
        (r.condition_i == Some(true), "inner_eventual"),
        (r.finitely_additive == Some(true), "finitely_additive_eventual"),
    ];
    for (on, key) in flags {
        if on {
            keys.push(key);
        }
    }
    keys
}

fn cell(r: &SpeciesReport) -> &'static str {
    match (r.self_aso, r.filter) {
        (true, true) => "self_aso_and_filter",
        (true, false) => "self_aso_not_filter",
        (false, true) => "filter_not_self_aso",
        (false, false) => "neither",
    }
}

pub fn census(n: usize) -> Result<CensusTable, VerifierError> {
    let families = enumerate_families(n, FamilyFilter::All)?;
    let rows: Vec<(Family, SpeciesReport)> = families
        .into_par_iter()
        .map(|f| {
            let r = f.classify();
            (f, r)
        })
        .collect();

    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut cross_tab: BTreeMap<String, u64> = BTreeMap::new();
    for key in ["self_aso_and_filter", "self_aso_not_filter", "filter_not_self_aso", "neither"] {
        cross_tab.insert(key.into(), 0);
    }
    for (_, r) in &rows {
        for key in species_keys(r) {
            *counts.entry(key.into()).or_default() += 1;
        }
        *cross_tab.get_mut(cell(r)).unwrap() += 1;
    }

    let u = rows[0].0.universe().clone();
    let principal: Vec<Family> = (0..n).map(|x| Family::principal(&u, x)).collect();
    let ultras: Vec<&Family> = rows.iter().filter(|(_, r)| r.ultrafilter).map(|(f, _)| f).collect();
    let mut assertions = BTreeMap::new();
    assertions.insert("ultrafilters_are_principal".into(), ultras.iter().all(|f| principal.contains(f)));
    assertions.insert("every_point_gives_an_ultrafilter".into(), ultras.len() == n);
    assertions.insert(
        "self_aso_filter_iff_ultrafilter".into(),
        rows.iter().all(|(_, r)| (r.self_aso && r.filter) == r.ultrafilter),
    );
    Ok(CensusTable { n, total: rows.len() as u64, counts, cross_tab, assertions })
}
