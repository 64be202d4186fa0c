use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on universe size; masks are `u32` and dense tables have `2^n` slots.
pub const MAX_UNIVERSE: usize = 16;

/// A subset of a finite universe as a characteristic bit vector.
///
/// Bit `i` is set iff element `i` belongs. The mask does not know its
/// universe; the owning structure supplies it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> SubsetMask {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> SubsetMask {
        SubsetMask(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> SubsetMask {
        SubsetMask(elements.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn with(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << i))
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to a universe of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Element indices in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

/// A finite, ordered universe of labelled elements.
///
/// Cloning is cheap; the label list is shared.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "UniverseRepr", into = "UniverseRepr")]
pub struct Universe {
    labels: Arc<[String]>,
}

#[derive(Serialize, Deserialize)]
struct UniverseRepr {
    labels: Vec<String>,
}

impl TryFrom<UniverseRepr> for Universe {
    type Error = Error;

    fn try_from(repr: UniverseRepr) -> Result<Self> {
        Universe::new(repr.labels)
    }
}

impl From<Universe> for UniverseRepr {
    fn from(u: Universe) -> Self {
        UniverseRepr { labels: u.labels.to_vec() }
    }
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { size: labels.len(), max: MAX_UNIVERSE });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels: labels.into() })
    }

    /// `a, b, c, ...` (then `x16`-style names past `z`).
    pub fn letters(n: usize) -> Result<Universe> {
        Universe::new((0..n).map(|i| if i < 26 { char::from(b'a' + i as u8).to_string() } else { format!("x{i}") }))
    }

    /// `0, 1, 2, ...`
    pub fn indexed(n: usize) -> Result<Universe> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    /// Cartesian product with element `(x, y)` at index `x * |other| + y`.
    pub fn product(&self, other: &Universe) -> Result<Universe> {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for x in self.labels() {
            for y in other.labels() {
                labels.push(format!("({x},{y})"));
            }
        }
        Universe::new(labels)
    }

    /// `k`-tuples, first coordinate most significant.
    pub fn power(&self, k: usize) -> Result<Universe> {
        let n = self.len();
        let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
        if total > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { size: total, max: MAX_UNIVERSE });
        }
        Universe::new((0..total).map(|t| {
            let parts: Vec<&str> = tuple_digits(t, n, k).iter().map(|&i| self.label(i)).collect();
            format!("({})", parts.join(","))
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// Number of subsets, `2^n`.
    pub fn powerset_size(&self) -> usize {
        1 << self.len()
    }

    /// All subsets in mask order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.powerset_size() as u32).map(SubsetMask)
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        labels.iter().try_fold(SubsetMask::EMPTY, |m, l| Ok(m.with(self.index_of(l.as_ref())?)))
    }

    /// Sorted label list of a subset (the JSON form of a mask).
    pub fn labels_of(&self, mask: SubsetMask) -> Vec<String> {
        mask.elements().map(|i| self.labels[i].clone()).collect()
    }

    /// Sub-universe holding exactly the elements of `mask`, in order.
    pub fn restrict(&self, mask: SubsetMask) -> Result<Universe> {
        Universe::new(self.labels_of(mask))
    }

    pub fn format_mask(&self, mask: SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(mask).join(","))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// Base-`n` digits of a tuple index, most significant first.
pub fn tuple_digits(mut t: usize, n: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    for slot in digits.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
    digits
}

/// A total map between two finite universes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMap {
    domain: Universe,
    codomain: Universe,
    images: Vec<usize>,
}

impl FiniteMap {
    pub fn new(domain: Universe, codomain: Universe, images: Vec<usize>) -> Result<FiniteMap> {
        if images.len() != domain.len() || images.iter().any(|&y| y >= codomain.len()) {
            return Err(Error::InvalidMap { expected: domain.len(), codomain: codomain.len() });
        }
        Ok(FiniteMap { domain, codomain, images })
    }

    pub fn identity(u: &Universe) -> FiniteMap {
        FiniteMap { domain: u.clone(), codomain: u.clone(), images: (0..u.len()).collect() }
    }

    /// Every map `domain -> codomain`, in lexicographic order of image vectors.
    pub fn all(domain: &Universe, codomain: &Universe) -> impl Iterator<Item = FiniteMap> {
        let (n, m) = (domain.len(), codomain.len());
        let total = m.pow(n as u32);
        let (domain, codomain) = (domain.clone(), codomain.clone());
        (0..total).map(move |t| FiniteMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: tuple_digits(t, m, n),
        })
    }

    pub fn domain(&self) -> &Universe {
        &self.domain
    }

    pub fn codomain(&self) -> &Universe {
        &self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, s: SubsetMask) -> SubsetMask {
        SubsetMask::from_elements(s.elements().map(|x| self.images[x]))
    }

    pub fn preimage(&self, s: SubsetMask) -> SubsetMask {
        SubsetMask::from_elements((0..self.images.len()).filter(|&x| s.contains(self.images[x])))
    }
}
