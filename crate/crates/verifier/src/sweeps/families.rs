//! Sweeps over families: complement duality, the associate involution,
//! push, the finite-additivity equivalences and product constructions.

use rayon::prelude::*;
use serde_json::json;
use setfam::families::{majority_projection, product_raw, product_self_aso as product, prop_flt_report, ProductOrder};
use setfam::multifamilies::{indicator_of_family, is_inner, is_outer};
use setfam::{push_family, Family, FiniteMap, SubsetMask, Universe};

use super::ScopeConfig;
use crate::enumerate::{enumerate_families, FamilyFilter};
use crate::error::VerifierError;
use crate::report::{Check, Tally};
use crate::shrink::shrink_family;

fn word(f: &Family) -> u64 {
    f.words()[0]
}

pub fn simple_observ(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[3, 4]) {
        let all = enumerate_families(n, FamilyFilter::All)?;
        let checks: Vec<(Check, bool)> = all
            .par_iter()
            .map(|f| {
                let ev = f.is_eventual();
                let dual = f.complement_family().is_co_eventual();
                let via_complements = f.family_of_complements().is_co_eventual();
                let check = if ev == dual && ev == via_complements {
                    Ok(())
                } else {
                    Err(json!({ "family": f, "eventual": ev, "complement_co_eventual": dual }))
                };
                (check, ev && f.is_co_eventual())
            })
            .collect();
        let both = checks.iter().filter(|(_, b)| *b).count() as u64;
        tally.absorb(checks.into_iter().map(|(c, _)| c));
        tally.note(format!("eventual_and_co_eventual_n{n}"), both);
        tally.record(if both == 2 {
            Ok(())
        } else {
            Err(json!({ "n": n, "eventual_and_co_eventual": both, "expected": 2 }))
        });
    }
    Ok(tally)
}

pub fn aso_involution(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[3, 4]) {
        let all = enumerate_families(n, FamilyFilter::All)?;
        // families here fit one word, indexed by that word
        let aso: Vec<u64> = all.par_iter().map(|f| word(&f.aso())).collect();
        let checks: Vec<(Check, u64)> = all
            .par_iter()
            .map(|g| {
                if g.aso().aso() != *g {
                    return (Err(json!({ "family": g, "aso_aso": g.aso().aso() })), 0);
                }
                let gw = word(g);
                let (mut sub, mut pairs) = (gw, 0u64);
                loop {
                    pairs += 1;
                    if aso[gw as usize] & !aso[sub as usize] != 0 {
                        let f = Family::from_words(g.universe(), vec![sub]);
                        return (
                            Err(json!({ "smaller": f, "larger": g, "reason": "aso(larger) not within aso(smaller)" })),
                            pairs,
                        );
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & gw;
                }
                (Ok(()), pairs)
            })
            .collect();
        tally.note(format!("comparable_pairs_n{n}"), checks.iter().map(|(_, p)| p).sum());
        tally.absorb(checks.into_iter().map(|(c, _)| c));
    }
    Ok(tally)
}

pub fn push_aso_commute(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.sizes_or(&[3]) {
        let x = Universe::letters(n)?;
        let all = enumerate_families(n, FamilyFilter::All)?;
        for m in 1..=3 {
            let y = Universe::indexed(m)?;
            for f in FiniteMap::all(&x, &y) {
                let checks: Vec<Check> = all
                    .par_iter()
                    .map(|fam| {
                        let fails =
                            |c: &Family| push_family(&f, &c.aso()).ok() != push_family(&f, c).ok().map(|p| p.aso());
                        if fails(fam) {
                            let small = shrink_family(fam, fails);
                            Err(json!({ "map": f.images(), "codomain": y, "family": small }))
                        } else {
                            Ok(())
                        }
                    })
                    .collect();
                tally.absorb(checks);
            }
        }
    }
    Ok(tally)
}

pub fn prop_flt(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.up_to(4) {
        let fams = enumerate_families(n, FamilyFilter::SelfAsoEventual)?;
        tally.note(format!("self_aso_eventual_n{n}"), fams.len() as u64);
        for f in fams {
            let report = prop_flt_report(&f)?;
            if report.filter {
                tally.note("filters", 1);
            }
            tally.record(if report.all_equal() { Ok(()) } else { Err(json!({ "family": f, "report": report })) });
        }
    }
    Ok(tally)
}

pub fn outer_inner_bridge(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.up_to(3) {
        for f in enumerate_families(n, FamilyFilter::Eventual)? {
            let ind = indicator_of_family(&f);
            let o = f.condition_o()?;
            let outer = is_outer(&ind)?;
            let aso_filter = f.aso().is_filter();
            let i = f.condition_i()?;
            let inner = is_inner(&ind)?;
            tally.record(if o == outer && outer == aso_filter && i == inner {
                Ok(())
            } else {
                Err(json!({
                    "family": f,
                    "condition_o": o, "indicator_outer": outer, "aso_is_filter": aso_filter,
                    "condition_i": i, "indicator_inner": inner,
                }))
            });
        }
    }
    Ok(tally)
}

/// Subsets of `X × Y` on which the two product orders disagree.
pub fn order_witnesses(e: &Family, f: &Family) -> Result<Vec<SubsetMask>, VerifierError> {
    let xy = product_raw(e, f, ProductOrder::XThenY)?;
    let yx = product_raw(e, f, ProductOrder::YThenX)?;
    Ok(xy.universe().subsets().filter(|&s| xy.contains(s) != yx.contains(s)).collect())
}

pub fn product_self_aso(cfg: &ScopeConfig) -> Result<Tally, VerifierError> {
    let mut tally = Tally::default();
    for n in cfg.up_to(3) {
        let fams = enumerate_families(n, FamilyFilter::SelfAsoEventual)?;
        for e in &fams {
            for f in &fams {
                for order in [ProductOrder::XThenY, ProductOrder::YThenX] {
                    let p = product(e, f, order)?;
                    tally.record(if p.is_self_aso() && p.is_eventual() {
                        Ok(())
                    } else {
                        Err(json!({ "first": e, "second": f, "order": order }))
                    });
                }
            }
        }
    }

    let x3 = Universe::letters(3)?;
    let maj = Family::majority(&x3);
    let witnesses = order_witnesses(&maj, &maj)?;
    tally.note("majority_order_witnesses", witnesses.len() as u64);
    tally.record(if witnesses.is_empty() {
        Err(json!({ "reason": "no order-dependence witness on the majority product" }))
    } else {
        Ok(())
    });

    let x2 = Universe::letters(2)?;
    let cube = x2.power(3)?;
    let aab = Family::principal(&cube, cube.index_of("(a,a,b)")?);
    let projected = majority_projection(&aab, &x2, 3)?;
    tally.record(if projected == Family::principal(&x2, 0) {
        Ok(())
    } else {
        Err(json!({ "projection_of_principal_aab": projected }))
    });
    Ok(tally)
}
