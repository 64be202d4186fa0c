//! Enumeration helpers over subsets of a single mask.

use super::SubsetMask;

/// All submasks of `s`, from `s` itself down to the empty mask.
pub fn submasks(s: SubsetMask) -> impl Iterator<Item = SubsetMask> {
    let s = s.0;
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & s) };
        Some(SubsetMask(cur))
    })
}

/// Nonempty proper submasks of `s`.
fn proper_nonempty(s: SubsetMask) -> impl Iterator<Item = SubsetMask> {
    submasks(s).filter(move |&a| a != s && !a.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// `A ∪ B = S` with both `A` and `B` strictly below `S`.
    Cover,
    /// `A ⊔ B = S` with both parts nonempty.
    Disjoint,
}

/// Ordered binary splits of `s`; both orders of every pair are produced.
pub fn binary_decompositions(s: SubsetMask, mode: SplitMode) -> Box<dyn Iterator<Item = (SubsetMask, SubsetMask)>> {
    match mode {
        SplitMode::Disjoint => Box::new(proper_nonempty(s).map(move |a| (a, s.minus(a)))),
        SplitMode::Cover => Box::new(proper_nonempty(s).flat_map(move |a| {
            let rest = s.minus(a);
            submasks(a).filter(move |&c| c != a).map(move |c| (a, rest.union(c)))
        })),
    }
}

/// Set partitions of `s` into nonempty blocks, via restricted-growth strings.
///
/// Blocks are listed in order of their smallest element.
pub fn set_partitions(s: SubsetMask) -> Vec<Vec<SubsetMask>> {
    let elems: Vec<usize> = s.elements().collect();
    let mut out = Vec::new();
    if elems.is_empty() {
        out.push(Vec::new());
        return out;
    }
    let mut rgs = vec![0usize; elems.len()];
    loop {
        let blocks = rgs.iter().max().unwrap() + 1;
        let mut parts = vec![SubsetMask::EMPTY; blocks];
        for (&e, &b) in elems.iter().zip(&rgs) {
            parts[b] = parts[b].with(e);
        }
        out.push(parts);
        // next restricted-growth string
        let mut i = rgs.len() - 1;
        loop {
            if i == 0 {
                return out;
            }
            let bound = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < bound {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_count() {
        assert_eq!(submasks(SubsetMask(0b1011)).count(), 8);
        assert_eq!(submasks(SubsetMask::EMPTY).collect::<Vec<_>>(), vec![SubsetMask::EMPTY]);
    }

    #[test]
    fn singleton_has_no_cover_split() {
        assert_eq!(binary_decompositions(SubsetMask(0b1), SplitMode::Cover).count(), 0);
        assert_eq!(binary_decompositions(SubsetMask::EMPTY, SplitMode::Cover).count(), 0);
    }

    #[test]
    fn pair_splits() {
        let ab = SubsetMask(0b11);
        let (a, b) = (SubsetMask(0b01), SubsetMask(0b10));
        let disjoint: Vec<_> = binary_decompositions(ab, SplitMode::Disjoint).collect();
        assert_eq!(disjoint.len(), 2);
        assert!(disjoint.contains(&(a, b)) && disjoint.contains(&(b, a)));
        let cover: Vec<_> = binary_decompositions(ab, SplitMode::Cover).collect();
        assert!(cover.contains(&(a, b)));
        assert!(!cover.contains(&(ab, b)));
    }

    #[test]
    fn split_counts_and_shapes() {
        for bits in 0u32..64 {
            let s = SubsetMask(bits);
            let k = s.len() as u32;
            let disjoint: Vec<_> = binary_decompositions(s, SplitMode::Disjoint).collect();
            let expected = if k == 0 { 0 } else { (1usize << k) - 2 };
            assert_eq!(disjoint.len(), expected);
            for (a, b) in disjoint {
                assert!(a.is_disjoint(b) && a.union(b) == s && !a.is_empty() && !b.is_empty());
            }
            let covers: Vec<_> = binary_decompositions(s, SplitMode::Cover).collect();
            for &(a, b) in &covers {
                assert_eq!(a.union(b), s);
                assert!(a != s && b != s);
            }
            // every proper cover pair appears exactly once
            let brute = submasks(s)
                .flat_map(|a| submasks(s).map(move |b| (a, b)))
                .filter(|&(a, b)| a.union(b) == s && a != s && b != s)
                .count();
            assert_eq!(covers.len(), brute);
        }
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (k, &b) in bell.iter().enumerate() {
            let parts = set_partitions(SubsetMask::full(k));
            assert_eq!(parts.len(), b);
            for p in parts {
                let union = p.iter().fold(SubsetMask::EMPTY, |m, &x| m.union(x));
                assert_eq!(union, SubsetMask::full(k));
                assert_eq!(p.iter().map(|x| x.len()).sum::<usize>(), k);
            }
        }
    }
}
