//! Seeded generators for sampled sweep scopes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setfam::{EpSequence, EpSet, ExtNat, Family, MultiFamily, SubsetMask, Universe};

/// Independent stream per (seed, label), so adding a sweep never shifts the
/// inputs of another.
pub fn stream(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub const VALUES: [ExtNat; 4] = [ExtNat::ZERO, ExtNat::ONE, ExtNat::Fin(2), ExtNat::Inf];

/// A random increasing `{0, 1, 2, inf}`-valued multi-family: a random table
/// repaired upward to its increasing envelope. `M(∅)` is kept at zero three
/// times in four, since a positive value there makes every inner hull `inf`.
pub fn random_increasing(u: &Universe, rng: &mut impl Rng) -> MultiFamily {
    let zero_bottom = rng.gen_bool(0.75);
    let raw = MultiFamily::from_fn(u, |s| {
        if s.is_empty() && zero_bottom {
            ExtNat::ZERO
        } else {
            // lower values are likelier so the envelope stays varied
            VALUES[[0, 0, 0, 1, 1, 1, 2, 2, 3][rng.gen_range(0..9)]]
        }
    });
    raw.increasing_envelope()
}

/// Every increasing multi-family on `u` with values drawn from `values`.
pub fn all_increasing(u: &Universe, values: &[ExtNat]) -> Vec<MultiFamily> {
    let cells = u.powerset_size();
    let k = values.len();
    let total = k.pow(cells as u32);
    (0..total)
        .filter_map(|mut code| {
            let vals: Vec<ExtNat> = (0..cells)
                .map(|_| {
                    let v = values[code % k];
                    code /= k;
                    v
                })
                .collect();
            let m = MultiFamily::from_values(u, vals).ok()?;
            m.is_increasing().then_some(m)
        })
        .collect()
}

pub fn random_family(u: &Universe, rng: &mut impl Rng) -> Family {
    Family::from_fn(u, |_| rng.gen_bool(0.5))
}

/// Raw prefix and pattern bits, not necessarily canonical.
pub fn random_ep_bits(rng: &mut impl Rng) -> (Vec<bool>, Vec<bool>) {
    let density = rng.gen_range(0.15..0.9);
    let p = rng.gen_range(0..12);
    let q = rng.gen_range(1..9);
    let prefix = (0..p).map(|_| rng.gen_bool(density)).collect();
    let pattern = (0..q).map(|_| rng.gen_bool(density)).collect();
    (prefix, pattern)
}

pub fn random_epset(rng: &mut impl Rng) -> EpSet {
    let (prefix, pattern) = random_ep_bits(rng);
    EpSet::new(prefix, pattern).expect("pattern is nonempty")
}

pub fn random_sequence(u: &Universe, rng: &mut impl Rng) -> EpSequence {
    let n = u.len();
    let p = rng.gen_range(0..6);
    let q = rng.gen_range(1..7);
    let prefix = (0..p).map(|_| rng.gen_range(0..n)).collect();
    // a narrower value range for the pattern makes absent points common
    let hi = rng.gen_range(1..=n);
    let pattern = (0..q).map(|_| rng.gen_range(0..hi)).collect();
    EpSequence::new(u, prefix, pattern).expect("values lie in the universe")
}

pub fn random_toggles(rng: &mut impl Rng, max: usize) -> Vec<usize> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| rng.gen_range(0..40)).collect()
}

/// All subsets of `u`, for callers that index by mask.
pub fn subsets(u: &Universe) -> Vec<SubsetMask> {
    u.subsets().collect()
}
