//! Top-degree relations and the GF(2) functional they cut out.
//!
//! For each nonempty subgee `I` the relation `R_I` is the sum of all
//! monomials whose subscript set is a subgee disjoint from `I`. A
//! functional kills every relation iff it lies in the right kernel of the
//! disjointness matrix, so row reduction recovers φ with no reference to
//! the closed formula.

use crate::combinatorics::{set_leq, IndexSet};
use crate::duality::{phi, TopMonomial};
use crate::error::{Error, Result};
use crate::length::{count_subgees, enumerate_subgees, GeeParams};

/// Largest basis (number of subgees) the oracle will build a matrix for.
pub const DEFAULT_MAX_BASIS: u128 = 20_000;

/// Dense GF(2) matrix: rows are nonempty subgees `I`, columns all subgees
/// `J`, entry 1 iff `I ∩ J = ∅`. Rows are packed 64 columns per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    columns: Vec<IndexSet>,
    rows: Vec<IndexSet>,
    words: usize,
    bits: Vec<u64>,
}

impl RelationMatrix {
    pub fn columns(&self) -> &[IndexSet] {
        &self.columns
    }

    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    pub fn row_weight(&self, row: usize) -> u32 {
        self.row_words(row).iter().map(|w| w.count_ones()).sum()
    }

    /// Column indices set in `row`.
    pub fn row_support(&self, row: usize) -> Vec<usize> {
        (0..self.columns.len()).filter(|&c| self.entry(row, c)).collect()
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }

    /// Assembles the matrix over the given columns; rows are the nonempty
    /// columns in the same order.
    fn assemble(columns: Vec<IndexSet>) -> Self {
        let rows: Vec<IndexSet> = columns.iter().filter(|c| !c.is_empty()).cloned().collect();
        let words = columns.len().div_ceil(64).max(1);
        let masks: Vec<Vec<u64>> = columns.iter().map(element_mask).collect();
        let row_masks: Vec<&Vec<u64>> = columns
            .iter()
            .zip(&masks)
            .filter(|(c, _)| !c.is_empty())
            .map(|(_, m)| m)
            .collect();
        let mut bits = vec![0u64; rows.len() * words];
        for (r, rm) in row_masks.iter().enumerate() {
            let row = &mut bits[r * words..(r + 1) * words];
            for (c, cm) in masks.iter().enumerate() {
                if rm.iter().zip(cm).all(|(x, y)| x & y == 0) {
                    row[c / 64] |= 1 << (c % 64);
                }
            }
        }
        RelationMatrix { columns, rows, words, bits }
    }
}

fn element_mask(s: &IndexSet) -> Vec<u64> {
    let len = s.largest().map_or(1, |m| m as usize / 64 + 1);
    let mut v = vec![0u64; len];
    for x in s.iter() {
        v[x as usize / 64] |= 1 << (x % 64);
    }
    v
}

fn check_basis(a: &GeeParams, max_basis: u128) -> Result<()> {
    let size = count_subgees(a);
    if size > max_basis {
        return Err(Error::SizeLimit { what: "number of subgees", size, limit: max_basis });
    }
    Ok(())
}

/// The subgees `J` disjoint from `i`, in subgee order.
pub fn relation_row(a: &GeeParams, i: &IndexSet) -> Result<Vec<IndexSet>> {
    if i.is_empty() || !set_leq(i, &a.gee()) {
        return Err(Error::InvalidRelationIndex(i.to_string()));
    }
    Ok(enumerate_subgees(a).into_iter().filter(|j| j.is_disjoint(i)).collect())
}

pub fn build_matrix(a: &GeeParams) -> Result<RelationMatrix> {
    build_matrix_bounded(a, DEFAULT_MAX_BASIS)
}

pub fn build_matrix_bounded(a: &GeeParams, max_basis: u128) -> Result<RelationMatrix> {
    if a.k() == 0 {
        return Err(Error::NoRelations);
    }
    check_basis(a, max_basis)?;
    Ok(RelationMatrix::assemble(enumerate_subgees(a)))
}

/// Right kernel of a relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nullspace {
    pub rank: usize,
    pub dimension: usize,
    /// The unique nonzero kernel vector, present iff `dimension == 1`.
    pub functional: Option<Vec<bool>>,
}

/// Gaussian elimination to reduced row echelon form.
pub fn nullspace_functional(m: &RelationMatrix) -> Nullspace {
    let ncols = m.columns.len();
    let words = m.words;
    let mut rows: Vec<Vec<u64>> = (0..m.rows.len()).map(|r| m.row_words(r).to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();

    for col in 0..ncols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let rank = pivots.len();
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                // columns before `w` are already reduced in every row
                for i in w..words {
                    row[i] ^= pivot[i];
                }
            }
        }
        pivots.push(col);
    }

    let rank = pivots.len();
    let dimension = ncols - rank;
    let functional = (dimension == 1).then(|| {
        let mut is_pivot = vec![false; ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free = is_pivot.iter().position(|&p| !p).expect("one free column");
        let mut x = vec![false; ncols];
        x[free] = true;
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][free / 64] >> (free % 64) & 1 == 1;
        }
        x
    });
    Nullspace { rank, dimension, functional }
}

/// Oracle and formula values of φ side by side on every subgee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub a: GeeParams,
    pub subgees: Vec<IndexSet>,
    pub rank: usize,
    pub nullspace_dimension: usize,
    pub oracle: Option<Vec<bool>>,
    pub formula: Vec<bool>,
    pub agree: bool,
}

impl DualityReport {
    pub fn basis_size(&self) -> usize {
        self.subgees.len()
    }
}

pub fn cross_validate(a: &GeeParams) -> Result<DualityReport> {
    cross_validate_bounded(a, DEFAULT_MAX_BASIS)
}

pub fn cross_validate_bounded(a: &GeeParams, max_basis: u128) -> Result<DualityReport> {
    check_basis(a, max_basis)?;
    let matrix = RelationMatrix::assemble(enumerate_subgees(a));
    let kernel = nullspace_functional(&matrix);
    let formula = formula_values(a, &matrix.columns)?;
    let agree = kernel.functional.as_ref() == Some(&formula);
    Ok(DualityReport {
        a: a.clone(),
        subgees: matrix.columns,
        rank: kernel.rank,
        nullspace_dimension: kernel.dimension,
        oracle: kernel.functional,
        formula,
        agree,
    })
}

fn formula_values(a: &GeeParams, subgees: &[IndexSet]) -> Result<Vec<bool>> {
    subgees
        .iter()
        .map(|j| Ok(phi(a, &TopMonomial::for_gee(j.clone(), a)?)))
        .collect()
}

/// Outcome of applying the closed formula to every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub a: GeeParams,
    pub relations: usize,
    /// Relations `R_I` the formula does not send to zero.
    pub failures: Vec<IndexSet>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `φ(R_I) = 0` for every nonempty subgee `I` using the formula only.
pub fn verify_relations(a: &GeeParams, max_basis: u128) -> Result<VerifyReport> {
    check_basis(a, max_basis)?;
    let subgees = enumerate_subgees(a);
    let values = formula_values(a, &subgees)?;
    let masks: Vec<Vec<u64>> = subgees.iter().map(element_mask).collect();
    let mut failures = Vec::new();
    let mut relations = 0;
    for (i, im) in subgees.iter().zip(&masks) {
        if i.is_empty() {
            continue;
        }
        relations += 1;
        let image = masks
            .iter()
            .zip(&values)
            .filter(|(jm, _)| im.iter().zip(jm.iter()).all(|(x, y)| x & y == 0))
            .fold(false, |acc, (_, &v)| acc ^ v);
        if image {
            failures.push(i.clone());
        }
    }
    Ok(VerifyReport { a: a.clone(), relations, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gee(a: &[u32]) -> GeeParams {
        GeeParams::new(a.to_vec()).unwrap()
    }

    fn set(v: &[u32]) -> IndexSet {
        IndexSet::new(v.iter().copied()).unwrap()
    }

    fn dense(m: &RelationMatrix) -> Vec<Vec<u8>> {
        (0..m.rows().len())
            .map(|r| (0..m.columns().len()).map(|c| m.entry(r, c) as u8).collect())
            .collect()
    }

    #[test]
    fn relation_row_examples() {
        assert_eq!(relation_row(&gee(&[2]), &set(&[1])).unwrap(), vec![set(&[]), set(&[2])]);
        assert_eq!(relation_row(&gee(&[2]), &set(&[2])).unwrap(), vec![set(&[]), set(&[1])]);
        assert_eq!(relation_row(&gee(&[1]), &set(&[1])).unwrap(), vec![set(&[])]);
        assert!(matches!(
            relation_row(&gee(&[2]), &set(&[])),
            Err(Error::InvalidRelationIndex(_))
        ));
        assert!(matches!(
            relation_row(&gee(&[2]), &set(&[1, 2])),
            Err(Error::InvalidRelationIndex(_))
        ));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(dense(&build_matrix(&gee(&[1])).unwrap()), vec![vec![1, 0]]);
        assert_eq!(
            dense(&build_matrix(&gee(&[2])).unwrap()),
            vec![vec![1, 0, 1], vec![1, 1, 0]]
        );
        // columns ∅, {1}, {2}, {1,2}
        assert_eq!(
            dense(&build_matrix(&gee(&[1, 1])).unwrap()),
            vec![vec![1, 0, 1, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 0]]
        );
        assert_eq!(build_matrix(&gee(&[])), Err(Error::NoRelations));
        assert!(matches!(
            build_matrix_bounded(&gee(&[2, 2, 2]), 10),
            Err(Error::SizeLimit { size: 35, .. })
        ));
    }

    #[test]
    fn nullspace_examples() {
        let k = nullspace_functional(&build_matrix(&gee(&[2])).unwrap());
        assert_eq!((k.rank, k.dimension), (2, 1));
        assert_eq!(k.functional, Some(vec![true, true, true]));

        let k = nullspace_functional(&build_matrix(&gee(&[1])).unwrap());
        assert_eq!(k.dimension, 1);
        assert_eq!(k.functional, Some(vec![false, true]));

        let empty = RelationMatrix::assemble(vec![IndexSet::empty()]);
        let k = nullspace_functional(&empty);
        assert_eq!((k.rank, k.dimension), (0, 1));
        assert_eq!(k.functional, Some(vec![true]));
    }

    #[test]
    fn zero_row_matrix_has_full_kernel() {
        let m = RelationMatrix {
            columns: vec![set(&[]), set(&[1]), set(&[2])],
            rows: Vec::new(),
            words: 1,
            bits: Vec::new(),
        };
        let k = nullspace_functional(&m);
        assert_eq!((k.rank, k.dimension, k.functional), (0, 3, None));
    }

    #[test]
    fn cross_validate_examples() {
        let r = cross_validate(&gee(&[2])).unwrap();
        assert!(r.agree);
        assert_eq!((r.basis_size(), r.rank), (3, 2));

        let r = cross_validate(&gee(&[1, 1])).unwrap();
        assert!(r.agree);
        assert_eq!((r.basis_size(), r.rank), (4, 3));

        let r = cross_validate(&gee(&[])).unwrap();
        assert!(r.agree);
        assert_eq!((r.basis_size(), r.rank, r.nullspace_dimension), (1, 0, 1));
    }

    #[test]
    fn verify_two_two_two() {
        let v = verify_relations(&gee(&[2, 2, 2]), DEFAULT_MAX_BASIS).unwrap();
        assert_eq!(v.relations, 34);
        assert!(v.passed());
    }

    #[test]
    fn wide_matrix_crosses_word_boundaries() {
        // classes (0,0) (1,0) (0,1) (2,0) (1,1): 1 + 70 + 1 + 2415 + 70
        let a = gee(&[70, 1]);
        let r = cross_validate(&a).unwrap();
        assert_eq!(r.basis_size(), 2557);
        assert_eq!(r.nullspace_dimension, 1);
        assert!(r.agree);
    }
}
