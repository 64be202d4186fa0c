//! Window simulation of gap statistics, independent of canonical forms.

use setfam::ExtNat;

fn member(prefix: &[bool], pattern: &[bool], n: usize) -> bool {
    if n < prefix.len() {
        prefix[n]
    } else {
        pattern[(n - prefix.len()) % pattern.len()]
    }
}

/// Largest gap between consecutive positions with membership `wanted`,
/// over the first `max(1000, p + 20q)` integers, counting only gaps whose
/// left end lies in the periodic region. No such position means `inf`.
pub fn windowed_gap(prefix: &[bool], pattern: &[bool], wanted: bool) -> ExtNat {
    let (p, q) = (prefix.len(), pattern.len());
    let window = 1000.max(p + 20 * q);
    let hits: Vec<usize> = (0..window).filter(|&n| member(prefix, pattern, n) == wanted).collect();
    if !hits.iter().any(|&n| n >= p) {
        return ExtNat::Inf;
    }
    let widest = hits.windows(2).filter(|w| w[0] >= p).map(|w| w[1] - w[0] - 1).max().unwrap_or(0);
    ExtNat::Fin(widest as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evens_and_runs() {
        assert_eq!(windowed_gap(&[], &[true, false], true), ExtNat::ONE);
        assert_eq!(windowed_gap(&[], &[true, true, false], false), ExtNat::Fin(2));
        assert_eq!(windowed_gap(&[true, true], &[false], true), ExtNat::Inf);
    }
}
