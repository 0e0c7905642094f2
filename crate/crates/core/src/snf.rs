//! Smith normal form, invariant factors and exact ranks of integer matrices.
//!
//! Invariant factors are computed by sparse elimination on unit pivots, run in
//! checked `i64` arithmetic and repeated in `BigInt` on overflow, followed by
//! a dense Smith reduction of whatever is left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::SparseMatrix;

pub type DenseMatrix = Vec<Vec<BigInt>>;

trait Coeff: Clone {
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    /// `self - f * x`.
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn neg_mul(f: &Self, x: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Coeff for i64 {
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(i64::checked_mul(*f, *x)?)
    }
    fn neg_mul(f: &Self, x: &Self) -> Option<Self> {
        i64::checked_mul(*f, *x)?.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Coeff for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }
    fn neg_mul(f: &Self, x: &Self) -> Option<Self> {
        Some(-(f * x))
    }
    fn into_big(self) -> BigInt {
        self
    }
}

type Row<T> = Vec<(u32, T)>;

/// `a - f * p`, keeping the column bookkeeping of row `s` current.
fn merge_sub<T: Coeff>(
    a: &[(u32, T)],
    f: &T,
    p: &[(u32, T)],
    s: u32,
    col_count: &mut [usize],
    col_rows: &mut [Vec<u32>],
) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(a.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < p.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cp = p.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ca < cp {
            out.push(a[i].clone());
            i += 1;
        } else if cp < ca {
            let v = T::neg_mul(f, &p[j].1)?;
            col_count[cp as usize] += 1;
            col_rows[cp as usize].push(s);
            out.push((cp, v));
            j += 1;
        } else {
            let v = a[i].1.sub_mul(f, &p[j].1)?;
            if v.vanishes() {
                col_count[ca as usize] -= 1;
            } else {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates on `±1` pivots, chosen by a Markowitz cost. Returns the number of
/// pivots and the remaining nonzero rows, or `None` on `i64` overflow.
fn unit_eliminate<T: Coeff>(mut rows: Vec<Row<T>>, ncols: usize) -> Option<(usize, Vec<Row<T>>)> {
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0usize; ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(r as u32);
            col_count[*c as usize] += 1;
        }
    }
    let mut units = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let rl = row.len() - 1;
            if let Some((cost, _, _)) = best {
                if rl == 0 && cost == 0 {
                    break;
                }
            }
            for (k, (c, v)) in row.iter().enumerate() {
                if v.is_unit() {
                    let cost = rl * (col_count[*c as usize] - 1);
                    if best.map_or(true, |b| cost < b.0) {
                        best = Some((cost, r, k));
                        if cost == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((_, pr, pk)) = best else { break };
        let prow = std::mem::take(&mut rows[pr]);
        for (c, _) in &prow {
            col_count[*c as usize] -= 1;
        }
        let (pc, pv) = prow[pk].clone();
        let targets = std::mem::take(&mut col_rows[pc as usize]);
        for s in targets {
            let su = s as usize;
            let Ok(pos) = rows[su].binary_search_by_key(&pc, |e| e.0) else {
                continue;
            };
            let f = rows[su][pos].1.checked_mul(&pv)?;
            let merged = merge_sub(&rows[su], &f, &prow, s, &mut col_count, &mut col_rows)?;
            rows[su] = merged;
        }
        units += 1;
    }
    Some((units, rows.into_iter().filter(|r| !r.is_empty()).collect()))
}

fn compact_dense(rows: Vec<Row<BigInt>>) -> DenseMatrix {
    let mut cols: Vec<u32> = rows.iter().flatten().map(|e| e.0).collect();
    cols.sort_unstable();
    cols.dedup();
    rows.into_iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols.len()];
            for (c, v) in row {
                dense[cols.binary_search(&c).unwrap()] = v;
            }
            dense
        })
        .collect()
}

/// Nonzero invariant factors `s_1 | s_2 | ... | s_r` (positive, ascending).
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let g = m.content();
    if g == 0 {
        return Vec::new();
    }
    let rows: Vec<Row<i64>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v / g)).collect())
        .collect();
    let (units, residual) = match unit_eliminate(rows.clone(), m.ncols()) {
        Some((u, res)) => (
            u,
            res.into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                .collect(),
        ),
        None => {
            let big: Vec<Row<BigInt>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, v.into_big())).collect())
                .collect();
            unit_eliminate(big, m.ncols()).expect("BigInt elimination cannot overflow")
        }
    };
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_invariant_factors(compact_dense(residual)));
    let g = BigInt::from(g.abs());
    factors.into_iter().map(|f| f * &g).collect()
}

/// Rank over `Q`.
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

fn argmin_abs(a: &DenseMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.map_or(true, |(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if v.is_one() || (-v).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn row_sub(a: &mut DenseMatrix, i: usize, t: usize, q: &BigInt, from: usize) {
    let (src, dst) = if i < t {
        let (lo, hi) = a.split_at_mut(t);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[t], &mut hi[0])
    };
    for j in from..src.len() {
        if !src[j].is_zero() {
            dst[j] -= q * &src[j];
        }
    }
}

fn col_sub(a: &mut DenseMatrix, j: usize, t: usize, q: &BigInt, from: usize) {
    for row in a.iter_mut().skip(from) {
        if !row[t].is_zero() {
            let d = q * &row[t];
            row[j] -= d;
        }
    }
}

/// Replaces a diagonal by invariant factors via pairwise gcd/lcm.
fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for v in d.iter_mut() {
        *v = v.abs();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d.sort();
    d
}

/// Invariant factors of a dense matrix.
pub fn dense_invariant_factors(mut a: DenseMatrix) -> Vec<BigInt> {
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let n = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = argmin_abs(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    row_sub(&mut a, i, t, &q, t);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    col_sub(&mut a, j, t, &q, t);
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                break;
            }
            let mut best = (t, t);
            for i in t + 1..m {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    normalize_diagonal(diag)
}

/// `U A V = diag(s_1, ..., s_r, 0, ...)` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    /// `U^{-1}`; its columns form a basis adapted to the image.
    pub u_inv: DenseMatrix,
    pub v: DenseMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

fn identity(n: usize) -> DenseMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn swap_cols(a: &mut DenseMatrix, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// `col_dst += q * col_src` on every row.
fn col_add(a: &mut DenseMatrix, dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let d = q * &row[src];
            row[dst] += d;
        }
    }
}

/// Full Smith normal form with transforms of a sparse matrix.
pub fn smith_with_transforms(m: &SparseMatrix) -> Smith {
    let a: DenseMatrix = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    smith_dense(a, m.nrows(), m.ncols())
}

/// Full Smith normal form with transforms of an `nr x nc` dense matrix.
pub fn smith_dense(mut a: DenseMatrix, nr: usize, nc: usize) -> Smith {
    assert_eq!(a.len(), nr);
    let mut u_inv = identity(nr);
    let mut v = identity(nc);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let Some((pi, pj)) = argmin_abs(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut u_inv, t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    row_sub(&mut a, i, t, &q, t);
                    col_add(&mut u_inv, t, i, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    col_sub(&mut a, j, t, &q, t);
                    col_add(&mut v, j, t, &-&q);
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                let bad = (t + 1..nr).find(|&i| {
                    a[i][t + 1..].iter().any(|x| !(x % &a[t][t]).is_zero())
                });
                match bad {
                    None => break,
                    Some(i) => {
                        // row_t += row_i, then reduce again
                        let one = BigInt::from(-1);
                        row_sub(&mut a, t, i, &one, t);
                        col_add(&mut u_inv, i, t, &one);
                        continue;
                    }
                }
            }
            let mut best = (t, t);
            for i in t + 1..nr {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
                swap_cols(&mut u_inv, t, best.0);
            } else if best.1 != t {
                swap_cols(&mut a, t, best.1);
                swap_cols(&mut v, t, best.1);
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for row in u_inv.iter_mut() {
                row[t] = -&row[t];
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Smith { diag, u_inv, v }
}

/// Columns `V e_j` for `j >= rank`: a basis of the integer kernel.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_with_transforms(m);
    let r = s.rank();
    (r..m.ncols())
        .map(|j| s.v.iter().map(|row| row[j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn dense_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        let inner = b.len();
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_invariant_factors() {
        let m = SparseMatrix::from_triplets(2, 2, &[(0, 0, 2), (1, 1, 3)]);
        assert_eq!(invariant_factors(&m), big(&[1, 6]));
        let m = SparseMatrix::from_triplets(2, 3, &[(0, 0, 2), (0, 1, 4), (1, 2, 6)]);
        assert_eq!(invariant_factors(&m), big(&[2, 6]));
    }

    #[test]
    fn smith_transforms_reconstruct() {
        let m = SparseMatrix::from_columns(
            3,
            &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
        );
        let s = smith_with_transforms(&m);
        assert_eq!(s.diag, big(&[2, 6, 12]));
        let mut d = vec![vec![BigInt::zero(); 3]; 3];
        for (i, x) in s.diag.iter().enumerate() {
            d[i][i] = x.clone();
        }
        let a: DenseMatrix = m.to_dense().into_iter().map(|r| big(&r)).collect();
        // A V = U^{-1} S
        assert_eq!(dense_mul(&a, &s.v), dense_mul(&s.u_inv, &d));
        assert_eq!(invariant_factors(&m), s.diag);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = SparseMatrix::from_columns(1, &[vec![2], vec![4], vec![6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for x in k {
            let s: BigInt = x.iter().zip([2, 4, 6]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }
}
