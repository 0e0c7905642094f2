use std::collections::BTreeMap;
use std::time::Instant;

use realflag::tables::{table, validate, validate_named, TABLE_NAMES};
use realflag::matrix::SparseMatrix;
use realflag::GradedComplex;

const P: u64 = 1_000_000_007;

/// Rank over `GF(P)` of the given columns (each a dense vector of length `n`).
/// Torsion in these complexes is a power of 2, so this is the rational rank.
fn rank_mod_p(n: usize, columns: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<u64>> = columns
        .iter()
        .map(|c| {
            assert_eq!(c.len(), n);
            c.iter().map(|&v| v.rem_euclid(P as i64) as u64).collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow(rows[rank][col], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Columns of the incoming differential into degree `k`.
fn image_columns(c: &GradedComplex, k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return Vec::new();
    }
    let d: SparseMatrix = c.differential(k - 1);
    let mut cols = vec![vec![0; d.nrows()]; d.ncols()];
    for (r, col, v) in d.triplets() {
        cols[col][r] = v;
    }
    cols
}

/// Rechecks a validated table with dense arithmetic: every signed row is a
/// cocycle, and the rows of each degree are independent modulo coboundaries
/// with as many rows as the rational Betti number.
fn recheck(name: &str) {
    let t = table(name).unwrap();
    let c = GradedComplex::build_unchecked(&t.dims);
    let report = validate(&t, &c).unwrap();
    assert!(report.passed(), "{}", report.render());
    let mut by_degree: BTreeMap<usize, Vec<Vec<i64>>> = BTreeMap::new();
    for (row, rep) in t.rows.iter().zip(&report.rows) {
        let k = row.degree;
        let signs = rep.signs.as_ref().unwrap();
        let mut v = vec![0i64; c.cells(k).len()];
        for (p, &s) in row.cells.iter().zip(signs) {
            let (deg, idx) = c.position(p).unwrap();
            assert_eq!(deg, k, "{} in {}", p, name);
            v[idx] += s;
        }
        if k < c.top_degree() {
            assert!(c.differential(k).mul_vec(&v).iter().all(|&x| x == 0), "{} deg {}", name, k);
        }
        by_degree.entry(k).or_default().push(v);
    }
    for d in &report.degrees {
        let k = d.degree;
        let n = c.cells(k).len();
        let image = image_columns(&c, k);
        let base = rank_mod_p(n, &image);
        let mut all = image;
        let rows = by_degree.get(&k).cloned().unwrap_or_default();
        all.extend(rows.iter().cloned());
        assert_eq!(rank_mod_p(n, &all), base + rows.len(), "{} deg {}", name, k);
        // Betti number from ranks: dim ker d_k - rank d_{k-1}
        let out_rank = if k < c.top_degree() {
            let d = c.differential(k);
            let mut cols = vec![vec![0; d.nrows()]; d.ncols()];
            for (r, col, v) in d.triplets() {
                cols[col][r] = v;
            }
            rank_mod_p(d.nrows(), &cols)
        } else {
            0
        };
        assert_eq!(n - out_rank - base, rows.len(), "{} deg {} Betti", name, k);
    }
}

#[test]
fn small_tables_recheck() {
    for name in ["fl3", "fl4", "fl5", "fl234", "fl333"] {
        recheck(name);
    }
}

#[test]
fn larger_tables_recheck() {
    for name in ["fl6", "fl7", "fl335"] {
        recheck(name);
    }
}

#[test]
fn every_named_table_validates() {
    for name in TABLE_NAMES.iter().filter(|n| **n != "fl335") {
        let r = validate_named(name).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert!(r.rows.iter().all(|x| x.cocycle_patterns > 0));
    }
}

#[test]
fn fl335_validates_at_desk_scale() {
    let start = Instant::now();
    let t = table("fl335").unwrap();
    let c = GradedComplex::build_unchecked(&t.dims);
    assert_eq!(c.num_cells(), 9240);
    let r = validate(&t, &c).unwrap();
    assert!(r.passed(), "{}", r.render());
    assert!(start.elapsed().as_secs() < 600, "took {:?}", start.elapsed());
}

#[test]
fn reports_render_and_serialize() {
    let r = validate_named("fl3").unwrap();
    let text = r.render();
    assert!(text.starts_with("table fl3"));
    assert!(!text.contains("FAIL"));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["name"], "fl3");
    assert_eq!(json["rows"].as_array().unwrap().len(), r.rows.len());
}
