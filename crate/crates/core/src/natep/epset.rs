use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::ExtNat;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Reduces `(prefix, pattern)` to minimal period, then minimal preperiod.
pub(crate) fn canonicalize<T: PartialEq>(prefix: &mut Vec<T>, pattern: &mut Vec<T>) {
    let q = pattern.len();
    if let Some(d) = (1..=q).filter(|&d| q.is_multiple_of(d)).find(|&d| (d..q).all(|i| pattern[i] == pattern[i % d])) {
        pattern.truncate(d);
    }
    while !prefix.is_empty() && prefix.last() == pattern.last() {
        prefix.pop();
        pattern.rotate_right(1);
    }
}

/// An eventually periodic subset of the naturals: a finite prefix followed by
/// a pattern repeated forever. Always held in canonical form, so structural
/// equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EpSetRepr", into = "EpSetRepr")]
pub struct EpSet {
    prefix: Vec<bool>,
    pattern: Vec<bool>,
}

impl EpSet {
    pub fn new(mut prefix: Vec<bool>, mut pattern: Vec<bool>) -> Result<EpSet> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        canonicalize(&mut prefix, &mut pattern);
        Ok(EpSet { prefix, pattern })
    }

    /// Samples `member` on `[0, p + q)`, reading `[p, p + q)` as the period.
    pub fn from_fn(p: usize, q: usize, member: impl Fn(usize) -> bool) -> EpSet {
        assert!(q > 0, "period must be positive");
        let prefix = (0..p).map(&member).collect();
        let pattern = (p..p + q).map(&member).collect();
        EpSet::new(prefix, pattern).expect("nonempty pattern")
    }

    pub fn empty() -> EpSet {
        EpSet { prefix: vec![], pattern: vec![false] }
    }

    pub fn naturals() -> EpSet {
        EpSet { prefix: vec![], pattern: vec![true] }
    }

    pub fn evens() -> EpSet {
        EpSet { prefix: vec![], pattern: vec![true, false] }
    }

    pub fn odds() -> EpSet {
        EpSet { prefix: vec![], pattern: vec![false, true] }
    }

    /// `{n : n ≥ k}`.
    pub fn from_threshold(k: usize) -> EpSet {
        EpSet::from_fn(k, 1, |n| n >= k)
    }

    pub fn finite<I: IntoIterator<Item = usize>>(elements: I) -> EpSet {
        let elements: Vec<usize> = elements.into_iter().collect();
        let p = elements.iter().max().map_or(0, |m| m + 1);
        EpSet::from_fn(p, 1, |n| elements.contains(&n))
    }

    pub fn prefix(&self) -> &[bool] {
        &self.prefix
    }

    pub fn pattern(&self) -> &[bool] {
        &self.pattern
    }

    pub fn preperiod(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.pattern.len()
    }

    pub fn contains(&self, n: usize) -> bool {
        let p = self.prefix.len();
        if n < p {
            self.prefix[n]
        } else {
            self.pattern[(n - p) % self.pattern.len()]
        }
    }

    /// Elements below `bound`, increasing.
    pub fn elements_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (0..bound).filter(|&n| self.contains(n))
    }

    fn combine(&self, other: &EpSet, op: impl Fn(bool, bool) -> bool) -> EpSet {
        let p = self.preperiod().max(other.preperiod());
        let q = lcm(self.period(), other.period());
        EpSet::from_fn(p, q, |n| op(self.contains(n), other.contains(n)))
    }

    pub fn complement(&self) -> EpSet {
        EpSet { prefix: self.prefix.iter().map(|b| !b).collect(), pattern: self.pattern.iter().map(|b| !b).collect() }
    }

    pub fn union(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn minus(&self, other: &EpSet) -> EpSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &EpSet) -> bool {
        self.minus(other) == EpSet::empty()
    }

    pub fn is_finite(&self) -> bool {
        self.pattern.iter().all(|b| !b)
    }

    pub fn is_cofinite(&self) -> bool {
        self.pattern.iter().all(|&b| b)
    }

    /// Flips membership of each listed index.
    pub fn toggled(&self, indices: &[usize]) -> EpSet {
        let p = indices.iter().map(|i| i + 1).max().unwrap_or(0).max(self.preperiod());
        EpSet::from_fn(p, self.period(), |n| self.contains(n) ^ indices.contains(&n))
    }

    /// `limsup` of gaps between consecutive elements; `inf` for finite sets.
    ///
    /// A finite `limsup` of integers is attained infinitely often, so it is
    /// the largest gap whose left end lies in one period of the periodic
    /// part; its right end is at most one more period away.
    pub fn gap(&self) -> ExtNat {
        if self.is_finite() {
            return ExtNat::Inf;
        }
        let (p, q) = (self.preperiod(), self.period());
        let mut widest = 0;
        for a in (p..p + q).filter(|&a| self.contains(a)) {
            let b = (a + 1..=a + q).find(|&b| self.contains(b)).expect("an element recurs within one period");
            widest = widest.max(b - a - 1);
        }
        ExtNat::Fin(widest as u32)
    }

    /// `Gap` of the complement: the `limsup` of lengths of runs of
    /// consecutive elements. `0` exactly for finite sets.
    pub fn cogap(&self) -> ExtNat {
        self.complement().gap()
    }

    /// The largest gap between consecutive elements anywhere in the set
    /// (`inf` if the set is finite, counting the unbounded tail).
    pub fn max_gap_anywhere(&self) -> ExtNat {
        if self.is_finite() {
            return ExtNat::Inf;
        }
        let end = self.preperiod() + 2 * self.period();
        let elems: Vec<usize> = self.elements_below(end).collect();
        let widest = elems.windows(2).map(|w| w[1] - w[0] - 1).max().unwrap_or(0);
        ExtNat::Fin(widest as u32).max(self.gap())
    }
}

impl fmt::Display for EpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "{}({})", bits(&self.prefix), bits(&self.pattern))
    }
}

impl fmt::Debug for EpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_bits(s: &str, whole: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::BadEpSet(whole.to_string())),
        })
        .collect()
}

impl FromStr for EpSet {
    type Err = Error;

    /// Accepts `PREFIX(PATTERN)` such as `0110(10)`, or the JSON object form.
    fn from_str(s: &str) -> Result<EpSet> {
        let t = s.trim();
        if t.starts_with('{') {
            let repr: EpSetRepr = serde_json_lite(t).ok_or_else(|| Error::BadEpSet(t.to_string()))?;
            return EpSet::try_from(repr);
        }
        let open = t.find('(').ok_or_else(|| Error::BadEpSet(t.to_string()))?;
        let body = t[open + 1..].strip_suffix(')').ok_or_else(|| Error::BadEpSet(t.to_string()))?;
        EpSet::new(parse_bits(&t[..open], t)?, parse_bits(body, t)?)
    }
}

/// Minimal reader for `{"prefix": "...", "pattern": "..."}` so the core crate
/// does not need a JSON dependency.
fn serde_json_lite(t: &str) -> Option<EpSetRepr> {
    let field = |name: &str| -> Option<String> {
        let key = format!("\"{name}\"");
        let rest = &t[t.find(&key)? + key.len()..];
        let rest = rest.trim_start().strip_prefix(':')?.trim_start().strip_prefix('"')?;
        Some(rest[..rest.find('"')?].to_string())
    };
    Some(EpSetRepr { prefix: field("prefix").unwrap_or_default(), pattern: field("pattern")? })
}

#[derive(Serialize, Deserialize)]
struct EpSetRepr {
    #[serde(default)]
    prefix: String,
    pattern: String,
}

impl TryFrom<EpSetRepr> for EpSet {
    type Error = Error;

    fn try_from(repr: EpSetRepr) -> Result<Self> {
        let whole = format!("{}({})", repr.prefix, repr.pattern);
        EpSet::new(parse_bits(&repr.prefix, &whole)?, parse_bits(&repr.pattern, &whole)?)
    }
}

impl From<EpSet> for EpSetRepr {
    fn from(s: EpSet) -> Self {
        let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        EpSetRepr { prefix: bits(&s.prefix), pattern: bits(&s.pattern) }
    }
}
