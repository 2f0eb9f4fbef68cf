//! Length vectors and their genetic codes.
//!
//! Lengths are exact rationals. On construction they are scaled by the
//! least common denominator to integer weights, so every short/long
//! comparison is an integer comparison `2 * sum(S) < total`.

mod gee;
mod realize;

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::combinatorics::{set_leq, IndexSet};
use crate::error::{Error, Result};

pub use gee::{count_subgees, enumerate_subgees, monogenic_gee, GeeParams};
pub use realize::{realize_gee, realize_gee_bounded, EXTRA_SIDES};

pub type Rational = Ratio<i64>;

/// Largest `n` for which operations enumerating all subsets will run.
pub const DEFAULT_MAX_N: usize = 30;

/// Hard ceiling: subsets are bit masks in a `u64`.
const MASK_BITS: usize = 63;

/// Side lengths of a polygon, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthVector {
    lengths: Vec<Rational>,
    weights: Vec<i128>,
    total: i128,
}

impl LengthVector {
    /// Sorts and validates raw side lengths. The input order is discarded.
    pub fn normalize(raw: &[Rational]) -> Result<Self> {
        if let Some(position) = raw.iter().position(|x| *x <= Rational::from_integer(0)) {
            return Err(Error::InvalidLength { position });
        }
        if raw.len() < 3 {
            return Err(Error::TooFewSides(raw.len()));
        }
        let mut lengths = raw.to_vec();
        lengths.sort();

        let mut lcd: i128 = 1;
        for x in &lengths {
            lcd = lcd.lcm(&(*x.denom() as i128));
        }
        let mut weights = Vec::with_capacity(lengths.len());
        let mut total: i128 = 0;
        for x in &lengths {
            let w = (*x.numer() as i128)
                .checked_mul(lcd / *x.denom() as i128)
                .ok_or(Error::Overflow)?;
            total = total.checked_add(w).ok_or(Error::Overflow)?;
            weights.push(w);
        }
        total.checked_mul(2).ok_or(Error::Overflow)?;
        Ok(LengthVector { lengths, weights, total })
    }

    pub fn from_integers(raw: &[i64]) -> Result<Self> {
        let raw: Vec<Rational> = raw.iter().map(|&x| Rational::from_integer(x)).collect();
        Self::normalize(&raw)
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    /// Lengths scaled to integers by the least common denominator.
    pub fn weights(&self) -> &[i128] {
        &self.weights
    }

    fn mask_sum(&self, mask: u64) -> i128 {
        let mut sum = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            sum += self.weights[i];
            m &= m - 1;
        }
        sum
    }

    fn check_size(&self, max_n: usize) -> Result<()> {
        let limit = max_n.min(MASK_BITS);
        if self.n() > limit {
            return Err(Error::SizeLimit {
                what: "number of sides",
                size: self.n() as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }

    /// Whether `s` is short, i.e. its lengths sum to less than the rest.
    pub fn is_short(&self, s: &IndexSet) -> Result<bool> {
        let n = self.n() as u32;
        let mut sum: i128 = 0;
        for x in s.iter() {
            if x > n {
                return Err(Error::OutOfRange { element: x, max: n });
            }
            sum += self.weights[x as usize - 1];
        }
        match (2 * sum).cmp(&self.total) {
            std::cmp::Ordering::Less => Ok(true),
            std::cmp::Ordering::Greater => Ok(false),
            std::cmp::Ordering::Equal => Err(Error::NotGeneric),
        }
    }

    /// Whether no subset sums to exactly half the perimeter.
    pub fn is_generic(&self) -> bool {
        self.is_generic_bounded(DEFAULT_MAX_N)
            .expect("length vector too large for the genericity check")
    }

    /// Meet-in-the-middle subset-sum search for half the perimeter.
    pub fn is_generic_bounded(&self, max_n: usize) -> Result<bool> {
        self.check_size(max_n)?;
        if self.total % 2 != 0 {
            return Ok(true);
        }
        let half = self.total / 2;
        let (left, right) = self.weights.split_at(self.n() / 2);
        let left_sums: HashSet<i128> = subset_sums(left).collect();
        Ok(!subset_sums(right).any(|r| left_sums.contains(&(half - r))))
    }

    pub fn genetic_code(&self) -> Result<GeneticCode> {
        self.genetic_code_bounded(DEFAULT_MAX_N)
    }

    /// Maximal short subsets containing `n`, under the dominance order.
    ///
    /// Short sets containing `n` are closed downward in that order, so a
    /// short set is maximal iff each of its covers is long. The covers of
    /// `S` are `S` plus its smallest missing element, and `S` with one
    /// element `s` replaced by `s + 1` when `s + 1` is not in `S`.
    pub fn genetic_code_bounded(&self, max_n: usize) -> Result<GeneticCode> {
        self.check_size(max_n)?;
        if !self.is_generic_bounded(max_n)? {
            return Err(Error::NotGeneric);
        }
        let n = self.n();
        let top = 1u64 << (n - 1);
        if 2 * self.weights[n - 1] >= self.total {
            return Err(Error::EmptySpace);
        }
        let short = |mask: u64| 2 * self.mask_sum(mask) < self.total;
        let full = (1u64 << n) - 1;

        let mut genes = Vec::new();
        for rest in 0..top {
            let mask = rest | top;
            if !short(mask) {
                continue;
            }
            let missing = !mask & full;
            if missing != 0 && short(mask | (missing & missing.wrapping_neg())) {
                continue;
            }
            // s -> s + 1 for each s with s + 1 free (n itself cannot move)
            let mut movable = mask & (missing >> 1);
            let mut maximal = true;
            while movable != 0 {
                let bit = movable & movable.wrapping_neg();
                if short(mask ^ bit ^ (bit << 1)) {
                    maximal = false;
                    break;
                }
                movable &= movable - 1;
            }
            if maximal {
                genes.push(IndexSet::from_mask(mask));
            }
        }
        genes.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.descending().cmp(&y.descending())));
        Ok(GeneticCode { n: n as u32, genes })
    }
}

fn subset_sums(weights: &[i128]) -> impl Iterator<Item = i128> + '_ {
    (0u64..1 << weights.len()).map(move |mask| {
        weights
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, w)| *w)
            .sum()
    })
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// The genes of a length vector: maximal short sets containing `n`.
///
/// Genes are ordered by decreasing size, then lexicographically on their
/// elements written in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneticCode {
    pub n: u32,
    pub genes: Vec<IndexSet>,
}

impl GeneticCode {
    pub fn is_monogenic(&self) -> bool {
        self.genes.len() == 1
    }

    /// Whether `s` lies below some gene.
    pub fn dominates(&self, s: &IndexSet) -> bool {
        self.genes.iter().any(|g| set_leq(s, g))
    }
}

impl fmt::Display for GeneticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let desc: Vec<String> = g.descending().iter().map(u32::to_string).collect();
            write!(f, "{{{}}}", desc.join(","))?;
        }
        f.write_str("}")
    }
}
