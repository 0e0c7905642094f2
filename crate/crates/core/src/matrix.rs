//! Sparse integer matrices stored by rows.

use num_integer::Integer;
use serde::Serialize;

use crate::gf2::BitMatrix;

/// A sparse `i64` matrix; each row is sorted by column with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, i64)]) -> Self {
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); nrows];
        for &(r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "triplet ({}, {}) out of range", r, c);
            rows[r].push((c as u32, v));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        SparseMatrix { nrows, ncols, rows }
    }

    /// Builds from dense columns.
    pub fn from_columns(nrows: usize, columns: &[Vec<i64>]) -> Self {
        let mut triplets = Vec::new();
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    triplets.push((r, c, v));
                }
            }
        }
        Self::from_triplets(nrows, columns.len(), &triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn row(&self, r: usize) -> &[(u32, i64)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec<(u32, i64)>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r]
            .binary_search_by_key(&(c as u32), |e| e.0)
            .map(|i| self.rows[r][i].1)
            .unwrap_or(0)
    }

    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c as usize, v)))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let t: Vec<(usize, usize, i64)> =
            self.triplets().into_iter().map(|(r, c, v)| (c, r, v)).collect();
        Self::from_triplets(self.ncols, self.nrows, &t)
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(c, v)| v * x[c as usize]).sum())
            .collect()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "inner dimensions differ");
        let mut acc = vec![0i64; other.ncols];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            for &(k, v) in row {
                for &(c, w) in &other.rows[k as usize] {
                    if acc[c as usize] == 0 {
                        touched.push(c);
                    }
                    acc[c as usize] += v * w;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &c in &touched {
                let x = std::mem::take(&mut acc[c as usize]);
                if x != 0 {
                    out.push((c, x));
                }
            }
            touched.clear();
            rows.push(out);
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    /// `[self | columns]`.
    pub fn with_columns(&self, columns: &[Vec<i64>]) -> Self {
        let mut t = self.triplets();
        for (k, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), self.nrows);
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    t.push((r, self.ncols + k, v));
                }
            }
        }
        Self::from_triplets(self.nrows, self.ncols + columns.len(), &t)
    }

    /// Columns with the given indices, in that order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let t: Vec<(usize, usize, i64)> = self
            .triplets()
            .into_iter()
            .filter(|&(_, c, _)| pos[c] != usize::MAX)
            .map(|(r, c, v)| (r, pos[c], v))
            .collect();
        Self::from_triplets(self.nrows, cols.len(), &t)
    }

    /// gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> i64 {
        self.rows
            .iter()
            .flatten()
            .fold(0i64, |g, &(_, v)| g.gcd(&v))
    }

    /// Reduction modulo 2 after dividing every entry by `divisor`.
    pub fn to_gf2(&self, divisor: i64) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.nrows, self.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                assert_eq!(v % divisor, 0, "entry {} not divisible by {}", v, divisor);
                if (v / divisor).rem_euclid(2) == 1 {
                    m.set(r, c as usize, true);
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.ncols]; self.nrows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_triplets(2, 3, &[(0, 0, 1), (0, 2, 2), (1, 1, -1)]);
        let b = SparseMatrix::from_triplets(3, 1, &[(0, 0, 3), (2, 0, 1)]);
        assert_eq!(a.mul(&b).to_dense(), vec![vec![5], vec![0]]);
        assert_eq!(a.transpose().get(2, 0), 2);
        assert_eq!(a.mul_vec(&[1, 1, 1]), vec![3, -1]);
    }

    #[test]
    fn duplicates_cancel() {
        let a = SparseMatrix::from_triplets(1, 1, &[(0, 0, 2), (0, 0, -2)]);
        assert!(a.is_zero());
        assert_eq!(a.content(), 0);
    }
}
