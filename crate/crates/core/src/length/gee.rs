use std::fmt;

use crate::combinatorics::{binomial, compositions, in_s_k, IndexSet, ThetaVector};
use crate::error::{Error, Result};

use super::GeneticCode;

/// Increments `(a_1, .., a_k)` of a single gee
/// `{a_1, a_1 + a_2, .., a_1 + .. + a_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeeParams {
    a: Vec<u32>,
    sums: Vec<u32>,
}

impl GeeParams {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.contains(&0) {
            return Err(Error::ZeroIncrement);
        }
        let sums = a
            .iter()
            .scan(0u32, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        Ok(GeeParams { a, sums })
    }

    /// Inverse of [`GeeParams::gee`].
    pub fn from_gee(gee: &IndexSet) -> Self {
        let mut prev = 0;
        let a = gee
            .iter()
            .map(|g| {
                let d = g - prev;
                prev = g;
                d
            })
            .collect();
        GeeParams::new(a).expect("ascending distinct elements give positive gaps")
    }

    pub fn increments(&self) -> &[u32] {
        &self.a
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn partial_sums(&self) -> &[u32] {
        &self.sums
    }

    /// `a_1 + .. + a_k`, the largest element of the gee (0 when k = 0).
    pub fn total(&self) -> u32 {
        self.sums.last().copied().unwrap_or(0)
    }

    pub fn gee(&self) -> IndexSet {
        IndexSet::new(self.sums.iter().copied()).expect("partial sums are strictly increasing")
    }

    /// θ-classes that some subgee realizes: `T` in `S_k` with `t_i <= a_i`.
    /// Ordered by weight, then lexicographically.
    pub fn feasible_classes(&self) -> Vec<ThetaVector> {
        let k = self.k();
        (0..=k as u32)
            .flat_map(|w| compositions(w, k))
            .filter(|t| in_s_k(t) && t.entries().iter().zip(&self.a).all(|(t, a)| t <= a))
            .collect()
    }
}

impl fmt::Display for GeeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Gee parameters of a monogenic code. A code whose only gene is `{n}`
/// gives the empty tuple.
pub fn monogenic_gee(code: &GeneticCode) -> Result<GeeParams> {
    match code.genes.as_slice() {
        [gene] => Ok(GeeParams::from_gee(&gene.without(code.n))),
        genes => Err(Error::NotMonogenic { genes: genes.len() }),
    }
}

/// Number of subgees, computed from the θ-classes without enumerating them.
pub fn count_subgees(a: &GeeParams) -> u128 {
    a.feasible_classes()
        .iter()
        .map(|t| {
            t.entries()
                .iter()
                .zip(a.increments())
                .map(|(&t, &a)| binomial(a as u64, t as u64))
                .product::<u128>()
        })
        .sum()
}

/// All subgees of the gee of `a`, including the empty set, ordered by size
/// and then lexicographically.
///
/// Generated block by block from the feasible θ-classes: a set is a subgee
/// exactly when its block counts lie in `S_k`.
pub fn enumerate_subgees(a: &GeeParams) -> Vec<IndexSet> {
    let mut out = Vec::new();
    let starts: Vec<u32> = std::iter::once(0)
        .chain(a.partial_sums().iter().copied())
        .collect();
    for t in a.feasible_classes() {
        let mut partial: Vec<Vec<u32>> = vec![Vec::new()];
        for (i, &count) in t.entries().iter().enumerate() {
            let block: Vec<u32> = (starts[i] + 1..=starts[i + 1]).collect();
            let choices = combinations(&block, count as usize);
            partial = partial
                .iter()
                .flat_map(|p| {
                    choices.iter().map(move |c| {
                        let mut v = p.clone();
                        v.extend_from_slice(c);
                        v
                    })
                })
                .collect();
        }
        out.extend(
            partial
                .into_iter()
                .map(|v| IndexSet::new(v).expect("blocks are disjoint")),
        );
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn combinations(items: &[u32], r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if items.len() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], r - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}
