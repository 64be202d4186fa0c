//! Exhaustive family enumeration for universes of at most four points.

use setfam::{Family, Universe};

use crate::error::VerifierError;

/// `2^16` families at four points; five would need `2^32`.
pub const ENUMERATION_MAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyFilter {
    All,
    Eventual,
    SelfAsoEventual,
    /// Eventual and satisfying condition (I).
    InnerEventual,
}

/// Truth tables of the monotone Boolean functions on `n` variables, bit `s`
/// being the value at subset `s`.
///
/// A monotone function splits on its top variable into two monotone halves
/// `f0 ≤ f1`; every such pair glues back to a monotone function.
pub fn monotone_tables(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![0, 1];
    }
    let half = monotone_tables(n - 1);
    let shift = 1 << (n - 1);
    let mut out = Vec::new();
    for &f0 in &half {
        for &f1 in &half {
            if f0 & !f1 == 0 {
                out.push(f0 | f1 << shift);
            }
        }
    }
    out
}

fn check_size(n: usize) -> Result<Universe, VerifierError> {
    if n == 0 || n > ENUMERATION_MAX {
        return Err(VerifierError::SizeCap { n, max: ENUMERATION_MAX });
    }
    Ok(Universe::letters(n)?)
}

/// All families on the `n`-letter universe passing `filter`, in increasing
/// order of their membership word.
pub fn enumerate_families(n: usize, filter: FamilyFilter) -> Result<Vec<Family>, VerifierError> {
    let u = check_size(n)?;
    let words: Vec<u64> = match filter {
        FamilyFilter::All => (0..1u64 << (1 << n)).collect(),
        _ => {
            let mut w = monotone_tables(n);
            w.sort_unstable();
            w
        }
    };
    let families = words.into_iter().map(|w| Family::from_words(&u, vec![w]));
    Ok(match filter {
        FamilyFilter::All | FamilyFilter::Eventual => families.collect(),
        FamilyFilter::SelfAsoEventual => families.filter(Family::is_self_aso).collect(),
        FamilyFilter::InnerEventual => families.filter(|f| f.condition_i().unwrap_or(false)).collect(),
    })
}
