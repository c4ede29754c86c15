use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Subset of `{1, ..., n}` stored as a bit mask (bit `i - 1` for element `i`).
///
/// Ordered by size first, then lexicographically by sorted elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

/// Largest supported ambient size.
pub const MAX_N: usize = 31;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_N);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        assert!((1..=MAX_N).contains(&i), "element {i} out of range");
        Subset(1 << (i - 1))
    }

    /// Panics on elements outside `1..=31`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems
            .into_iter()
            .fold(Subset::EMPTY, |s, i| s.union(Subset::singleton(i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_N).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 & !self.0)
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        (1..=MAX_N).filter(move |&i| self.contains(i))
    }

    /// All `2^n` subsets of `{1, ..., n}` in ascending order.
    pub fn all(n: usize) -> Vec<Subset> {
        assert!(n <= 20, "refusing to enumerate 2^{n} subsets");
        let mut v: Vec<Subset> = (0..1u32 << n).map(Subset).collect();
        v.sort();
        v
    }

    /// The `k`-element subsets of `{1, ..., n}` in ascending order.
    pub fn of_size(n: usize, k: usize) -> Vec<Subset> {
        Subset::all(n)
            .into_iter()
            .filter(|s| s.len() == k)
            .collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `{}`, `{1,3}` and the same without braces.
impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("not a subset: `{s}`"));
        let t = s.trim();
        let t = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut out = Subset::EMPTY;
        for part in t.split(',') {
            let i: usize = part.trim().parse().map_err(|_| bad())?;
            if !(1..=MAX_N).contains(&i) {
                return Err(bad());
            }
            out = out.union(Subset::singleton(i));
        }
        Ok(out)
    }
}
