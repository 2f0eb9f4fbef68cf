//! Search for a length vector whose genetic code is a prescribed single gene.

use crate::error::{Error, Result};

use super::{GeeParams, LengthVector, DEFAULT_MAX_N};

/// How many sides beyond the minimum the search tries at each total length.
pub const EXTRA_SIDES: usize = 2;

/// Finds an integer length vector whose only gene is `gee ∪ {n}`.
///
/// Candidates are sorted positive integer vectors, visited in order of
/// increasing total length up to `search_bound`. For each total, `n` runs
/// from `max(max(gee) + 1, 3)` up to [`EXTRA_SIDES`] more; for each `n`
/// the vectors are visited in lexicographic order. The first match wins.
pub fn realize_gee(a: &GeeParams, search_bound: u64) -> Result<LengthVector> {
    realize_gee_bounded(a, search_bound, DEFAULT_MAX_N)
}

pub fn realize_gee_bounded(a: &GeeParams, search_bound: u64, max_n: usize) -> Result<LengthVector> {
    let gee = a.gee();
    let n_min = (a.total() as usize + 1).max(3);
    if n_min > max_n {
        return Err(Error::SizeLimit {
            what: "number of sides",
            size: n_min as u128,
            limit: max_n as u128,
        });
    }
    let n_max = (n_min + EXTRA_SIDES).min(max_n);
    for total in n_min as u64..=search_bound {
        for n in n_min..=n_max.min(total as usize) {
            let target = gee.with(n as u32)?;
            let mut found = None;
            partitions(total, n, &mut |parts| {
                let Ok(lv) = LengthVector::from_integers(parts) else {
                    return false;
                };
                match lv.genetic_code_bounded(max_n) {
                    Ok(code) if code.genes.len() == 1 && code.genes[0] == target => {
                        found = Some(lv);
                        true
                    }
                    _ => false,
                }
            });
            if let Some(lv) = found {
                return Ok(lv);
            }
        }
    }
    Err(Error::NotFound { bound: search_bound })
}

/// Calls `visit` on each nondecreasing vector of `n` positive integers
/// summing to `total`, lexicographically, until it returns true.
fn partitions(total: u64, n: usize, visit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    fn go(
        remaining: u64,
        slots: usize,
        min: u64,
        prefix: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        if slots == 0 {
            return remaining == 0 && visit(prefix);
        }
        let mut x = min;
        while x * slots as u64 <= remaining {
            prefix.push(x as i64);
            let stop = go(remaining - x, slots - 1, x, prefix, visit);
            prefix.pop();
            if stop {
                return true;
            }
            x += 1;
        }
        false
    }
    go(total, n, 1, &mut Vec::with_capacity(n), visit)
}
