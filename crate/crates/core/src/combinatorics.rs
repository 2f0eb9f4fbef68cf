//! Combinatorial primitives: binomial parity, the dominance order on
//! integer sets, block counts relative to a gee, and the suffix-bounded
//! tuples `S_k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::length::GeeParams;

/// A finite set of distinct positive integers, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// Builds a set from elements in any order. Zero and repeats are rejected.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<u32> = elements.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateElement(w[0]));
            }
        }
        if v.first() == Some(&0) {
            return Err(Error::NonPositiveElement(0));
        }
        Ok(IndexSet(v))
    }

    /// Signed variant of [`IndexSet::new`] for untrusted input.
    pub fn from_signed(elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut v = Vec::new();
        for e in elements {
            if e <= 0 {
                return Err(Error::NonPositiveElement(e));
            }
            let e = u32::try_from(e).map_err(|_| Error::OutOfRange {
                element: u32::MAX,
                max: u32::MAX - 1,
            })?;
            v.push(e);
        }
        Self::new(v)
    }

    /// Set of the positions of the one bits of `mask`, counted from 1.
    pub fn from_mask(mask: u64) -> Self {
        IndexSet((0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// Elements in decreasing order, the customary way of writing genes.
    pub fn descending(&self) -> Vec<u32> {
        self.0.iter().rev().copied().collect()
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn with(&self, x: u32) -> Result<Self> {
        Self::new(self.0.iter().copied().chain(std::iter::once(x)))
    }

    pub fn without(&self, x: u32) -> Self {
        IndexSet(self.0.iter().copied().filter(|&e| e != x).collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A k-tuple of nonnegative integers: a θ-image, or one of the B, C, T,
/// m vectors summed over in the duality formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ThetaVector(Vec<u32>);

impl ThetaVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ThetaVector(entries)
    }

    pub fn zeros(k: usize) -> Self {
        ThetaVector(vec![0; k])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// `|T|`, the sum of the entries.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entrywise sum. Panics if the lengths differ.
    pub fn plus(&self, other: &ThetaVector) -> ThetaVector {
        assert_eq!(self.k(), other.k(), "theta vectors of different lengths");
        ThetaVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for ThetaVector {
    fn from(v: Vec<u32>) -> Self {
        ThetaVector(v)
    }
}

impl fmt::Display for ThetaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// `binom(m, r) mod 2` for any integer `m` and `r >= 0`.
///
/// Negative upper indices use `binom(m, r) = (-1)^r binom(r - m - 1, r)`;
/// the sign vanishes mod 2. Nonnegative ones use Lucas' criterion.
pub fn binom_parity(m: i64, r: i64) -> Result<bool> {
    if r < 0 {
        return Err(Error::NegativeIndex(r));
    }
    Ok(binom_parity_unsigned(m, r as u64))
}

/// Infallible form of [`binom_parity`] for a lower index known to be nonnegative.
pub fn binom_parity_unsigned(m: i64, r: u64) -> bool {
    let m = m as i128;
    let r = r as i128;
    let top = if m < 0 { r - m - 1 } else { m };
    if top < r {
        return false;
    }
    r & (top - r) == 0
}

/// Exact `binom(m, r)` for `m, r >= 0`. Panics on overflow of `u128`.
pub fn binomial(m: u64, r: u64) -> u128 {
    if r > m {
        return 0;
    }
    let r = r.min(m - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (m - i) is divisible by (i + 1)
        acc = acc
            .checked_mul((m - i) as u128)
            .expect("binomial coefficient overflows u128")
            / (i as u128 + 1);
    }
    acc
}

/// The dominance order: `s <= t` iff the elements of `s` can be matched to
/// distinct elements of `t` that are at least as large.
///
/// Matching the i-th largest of `s` against the i-th largest of `t` is
/// optimal, so the test is a single pass over both sets in decreasing order.
pub fn set_leq(s: &IndexSet, t: &IndexSet) -> bool {
    if s.len() > t.len() {
        return false;
    }
    s.iter().rev().zip(t.iter().rev()).all(|(x, y)| x <= y)
}

/// Block counts of `j` relative to the partial sums of `a`.
pub fn theta(j: &IndexSet, a: &GeeParams) -> Result<ThetaVector> {
    let bounds = a.partial_sums();
    let top = bounds.last().copied().unwrap_or(0);
    let mut counts = vec![0u32; a.k()];
    for x in j.iter() {
        if x > top {
            return Err(Error::OutOfRange { element: x, max: top });
        }
        // first block whose upper bound is >= x
        let block = bounds.partition_point(|&b| b < x);
        counts[block] += 1;
    }
    Ok(ThetaVector(counts))
}

/// True iff every suffix of length i sums to at most i.
pub fn in_s_k(t: &ThetaVector) -> bool {
    let mut suffix = 0u64;
    for (i, &x) in t.entries().iter().rev().enumerate() {
        suffix += x as u64;
        if suffix > i as u64 + 1 {
            return false;
        }
    }
    true
}

/// Iterator over all k-tuples of nonnegative integers with the given sum,
/// in lexicographic order: `(0,..,0,total)` first, `(total,0,..,0)` last.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

pub fn compositions(total: u32, k: usize) -> Compositions {
    let current = match k {
        0 if total == 0 => Some(Vec::new()),
        0 => None,
        _ => {
            let mut v = vec![0; k];
            v[k - 1] = total;
            Some(v)
        }
    };
    Compositions { current }
}

impl Iterator for Compositions {
    type Item = ThetaVector;

    fn next(&mut self) -> Option<ThetaVector> {
        let out = self.current.take()?;
        let k = out.len();
        // Advance: bump the rightmost position (before the last) that has
        // something to its right, and move the remainder to the end.
        let mut suffix = out.last().copied().unwrap_or(0);
        let mut next = None;
        for i in (0..k.saturating_sub(1)).rev() {
            if suffix > 0 {
                let mut v = out.clone();
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 0;
                }
                v[k - 1] = suffix - 1;
                next = Some(v);
                break;
            }
            suffix += out[i];
        }
        self.current = next;
        Some(ThetaVector(out))
    }
}
