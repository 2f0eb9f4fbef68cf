//! The Poincaré duality functional on top-degree monomials
//! `R^{n-3-r} V_{j_1} .. V_{j_r}` of a monogenic polygon space.
//!
//! For gee increments `a` and `θ = θ(J)`:
//!
//! ```text
//! φ = Σ_B Π_i binom(a_i + b_i - 2, b_i)   (mod 2)
//! ```
//!
//! over `k`-tuples `B >= 0` with `|B| = k - r` and `B + θ ∈ S_k`.

use crate::combinatorics::{
    binom_parity_unsigned, binomial, compositions, in_s_k, theta, IndexSet, ThetaVector,
};
use crate::error::{Error, Result};
use crate::length::GeeParams;

/// A top-degree monomial: distinct V-subscripts `J` and the side count `n`.
/// The R-exponent is `n - 3 - |J|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TopMonomial {
    j: IndexSet,
    n: u32,
}

impl TopMonomial {
    pub fn new(j: IndexSet, n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::MalformedMonomial(format!("n = {n} is below 3")));
        }
        if j.len() as u32 > n - 3 {
            return Err(Error::MalformedMonomial(format!(
                "{} V-factors exceed the top degree {}",
                j.len(),
                n - 3
            )));
        }
        if let Some(x) = j.iter().find(|&x| x > n - 1) {
            return Err(Error::MalformedMonomial(format!("subscript {x} exceeds n - 1 = {}", n - 1)));
        }
        Ok(TopMonomial { j, n })
    }

    /// Monomial with the smallest `n` that fits both `j` and the gee of `a`:
    /// `n = max(a_1 + .. + a_k + 1, max(j) + 1, k + 3, |j| + 3)`.
    pub fn for_gee(j: IndexSet, a: &GeeParams) -> Result<Self> {
        let n = [
            a.total() + 1,
            j.largest().unwrap_or(0) + 1,
            a.k() as u32 + 3,
            j.len() as u32 + 3,
        ]
        .into_iter()
        .max()
        .unwrap_or(3);
        Self::new(j, n)
    }

    pub fn subscripts(&self) -> &IndexSet {
        &self.j
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> usize {
        self.j.len()
    }

    pub fn r_exponent(&self) -> u32 {
        self.n - 3 - self.j.len() as u32
    }
}

/// φ of a monomial. Subscripts past the gee's largest element make the
/// monomial a zero class, as does `r > k`.
pub fn phi(a: &GeeParams, mono: &TopMonomial) -> bool {
    if mono.j.largest().is_some_and(|x| x > a.total()) {
        return false;
    }
    let t = theta(&mono.j, a).expect("subscripts are within the gee");
    phi_sum(a, &t)
}

/// φ on the θ-class `T`, i.e. on any monomial `Y_T`.
pub fn phi_by_theta(a: &GeeParams, t: &ThetaVector) -> Result<bool> {
    check_theta(a, t)?;
    Ok(phi_sum(a, t))
}

fn check_theta(a: &GeeParams, t: &ThetaVector) -> Result<()> {
    if t.k() != a.k() {
        return Err(Error::LengthMismatch { expected: a.k(), actual: t.k() });
    }
    for (index, (&value, &block)) in t.entries().iter().zip(a.increments()).enumerate() {
        if value > block {
            return Err(Error::InfeasibleTheta { index, value, block });
        }
    }
    Ok(())
}

/// The B-sum itself, with no feasibility check on `t` beyond its length.
///
/// Panics if `t` and `a` have different lengths.
pub fn phi_sum(a: &GeeParams, t: &ThetaVector) -> bool {
    phi_terms(a, t).into_iter().fold(false, |acc, (_, bit)| acc ^ bit)
}

/// The admissible `B` tuples (lexicographic order) and each one's term mod 2.
///
/// Panics if `t` and `a` have different lengths.
pub fn phi_terms(a: &GeeParams, t: &ThetaVector) -> Vec<(ThetaVector, bool)> {
    assert_eq!(t.k(), a.k(), "theta vector length differs from k");
    let k = a.k();
    let Some(weight) = (k as u32).checked_sub(t.weight()) else {
        return Vec::new();
    };
    compositions(weight, k)
        .filter(|b| in_s_k(&b.plus(t)))
        .map(|b| {
            let term = b
                .entries()
                .iter()
                .zip(a.increments())
                .all(|(&b, &a)| binom_parity_unsigned(a as i64 + b as i64 - 2, b as u64));
            (b, term)
        })
        .collect()
}

/// The k = 3 table written out as closed forms in `a_i' = a_i - 1`.
///
/// Classes outside `S_3` or of weight above 3 are zero classes.
pub fn closed_form_k3(a: &GeeParams, t: &ThetaVector) -> Result<bool> {
    if a.k() != 3 {
        return Err(Error::LengthMismatch { expected: 3, actual: a.k() });
    }
    if t.k() != 3 {
        return Err(Error::LengthMismatch { expected: 3, actual: t.k() });
    }
    if !in_s_k(t) || t.weight() > 3 {
        return Ok(false);
    }
    let [a1, a2, a3] = [0, 1, 2].map(|i| a.increments()[i] as u128);
    let [p1, p2, p3] = [a1 - 1, a2 - 1, a3 - 1];
    let c2 = |x: u128| x * x.saturating_sub(1) / 2;
    let value = match t.entries() {
        _ if t.weight() == 3 => 1,
        [0, 2, 0] | [0, 1, 1] => p1,
        [1, 0, 1] => p1 + p2,
        [2, 0, 0] | [1, 1, 0] => p1 + p2 + p3,
        [0, 0, 1] => c2(a1) + p1 * p2,
        [0, 1, 0] => c2(a1) + p1 * p2 + p1 * p3,
        [1, 0, 0] => c2(a1) + c2(a2) + p1 * p2 + p1 * p3 + p2 * p3,
        [0, 0, 0] => c2(a1) * (p1 + p2 + p3) + c2(a2) * p1 + p1 * p2 * p3,
        other => unreachable!("weight <= 2 class {other:?} in S_3 missing from the table"),
    };
    Ok(value % 2 == 1)
}

/// Number of sets `J` with `θ(J) = c` disjoint from a set `I` with
/// `θ(I) = m`: `Π binom(a_i - m_i, c_i)`, exact.
///
/// When `c` is in `S_k` every such `J` is a subgee.
pub fn count_disjoint_subgees(a: &GeeParams, m: &ThetaVector, c: &ThetaVector) -> Result<u128> {
    check_theta(a, m)?;
    if c.k() != a.k() {
        return Err(Error::LengthMismatch { expected: a.k(), actual: c.k() });
    }
    Ok(a.increments()
        .iter()
        .zip(m.entries())
        .zip(c.entries())
        .map(|((&a, &m), &c)| binomial((a - m) as u64, c as u64))
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gee(a: &[u32]) -> GeeParams {
        GeeParams::new(a.to_vec()).unwrap()
    }

    fn tv(v: &[u32]) -> ThetaVector {
        ThetaVector::new(v.to_vec())
    }

    fn mono(j: &[u32], a: &GeeParams) -> TopMonomial {
        TopMonomial::for_gee(IndexSet::new(j.iter().copied()).unwrap(), a).unwrap()
    }

    #[test]
    fn monomial_validation() {
        let j = IndexSet::new([1, 2]).unwrap();
        assert!(TopMonomial::new(j.clone(), 5).is_ok());
        assert!(matches!(TopMonomial::new(j.clone(), 4), Err(Error::MalformedMonomial(_))));
        assert!(matches!(
            TopMonomial::new(IndexSet::new([5]).unwrap(), 5),
            Err(Error::MalformedMonomial(_))
        ));
        assert!(matches!(TopMonomial::new(IndexSet::empty(), 2), Err(Error::MalformedMonomial(_))));
        let m = TopMonomial::new(j, 7).unwrap();
        assert_eq!((m.r(), m.r_exponent()), (2, 2));
    }

    #[test]
    fn phi_examples() {
        let a = gee(&[2, 2, 2]);
        // θ({3}) = (0,1,0)
        assert!(phi(&a, &mono(&[3], &a)));
        let bs: Vec<_> = phi_terms(&a, &tv(&[0, 1, 0])).into_iter().map(|(b, _)| b).collect();
        assert_eq!(bs, vec![tv(&[1, 0, 1]), tv(&[1, 1, 0]), tv(&[2, 0, 0])]);

        let a = gee(&[1]);
        assert!(!phi(&a, &mono(&[], &a)));
        let a = gee(&[2]);
        assert!(phi(&a, &mono(&[], &a)));
        let a = gee(&[]);
        assert!(phi(&a, &mono(&[], &a)));
    }

    #[test]
    fn phi_zero_classes() {
        let a = gee(&[2, 2]);
        // 5 is past the gee {2,4}
        assert!(!phi(&a, &mono(&[5], &a)));
        // θ({3,4}) = (0,2) is not in S_2
        assert!(!phi(&a, &mono(&[3, 4], &a)));
        // r > k
        assert!(!phi(&a, &mono(&[1, 2, 3], &a)));
        assert!(phi(&a, &mono(&[1, 3], &a)));
    }

    #[test]
    fn phi_by_theta_examples() {
        let a = gee(&[2, 2, 2]);
        assert_eq!(phi_by_theta(&a, &tv(&[1, 1, 1])), Ok(true));
        assert_eq!(phi_by_theta(&a, &tv(&[0, 2, 0])), Ok(true));
        assert_eq!(phi_by_theta(&gee(&[3, 2, 2]), &tv(&[0, 0, 0])), Ok(false));
        assert_eq!(
            phi_by_theta(&a, &tv(&[3, 0, 0])),
            Err(Error::InfeasibleTheta { index: 0, value: 3, block: 2 })
        );
        assert_eq!(
            phi_by_theta(&a, &tv(&[0, 0])),
            Err(Error::LengthMismatch { expected: 3, actual: 2 })
        );
    }

    #[test]
    fn closed_form_examples() {
        let a = gee(&[2, 2, 2]);
        assert_eq!(closed_form_k3(&a, &tv(&[1, 0, 1])), Ok(false));
        assert_eq!(closed_form_k3(&a, &tv(&[2, 0, 0])), Ok(true));
        assert_eq!(closed_form_k3(&gee(&[1, 1, 1]), &tv(&[0, 0, 0])), Ok(false));
        // (3·4 + 1·2 + 2·1·1) = 16
        assert_eq!(closed_form_k3(&gee(&[3, 2, 2]), &tv(&[0, 0, 0])), Ok(false));
        assert_eq!(closed_form_k3(&a, &tv(&[0, 2, 1])), Ok(false));
        assert!(closed_form_k3(&gee(&[2, 2]), &tv(&[0, 0])).is_err());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_disjoint_subgees(&gee(&[2, 2]), &tv(&[1, 0]), &tv(&[1, 1])), Ok(2));
        assert_eq!(count_disjoint_subgees(&gee(&[3, 1]), &tv(&[0, 0]), &tv(&[0, 0])), Ok(1));
        assert_eq!(count_disjoint_subgees(&gee(&[2, 2]), &tv(&[2, 0]), &tv(&[1, 0])), Ok(0));
        assert!(matches!(
            count_disjoint_subgees(&gee(&[2, 2]), &tv(&[3, 0]), &tv(&[0, 0])),
            Err(Error::InfeasibleTheta { .. })
        ));
    }
}
