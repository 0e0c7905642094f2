//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use realflag::matrix::SparseMatrix;
use realflag::{GradedComplex, OrderedSetPartition, YoungDiagram};

/// Sign of `[Ω_I, Ω_J]` from comparing the two orderings of the normal
/// space basis at `J` directly: the lexicographic one, and the one obtained by
/// putting `-(e_b -> e_a)` first and transporting the basis at `I`.
pub fn orientation_sign(i: &OrderedSetPartition, a: usize, b: usize) -> i64 {
    let j = i.swap(a, b);
    let target = j.normal_set();
    let in_j = |c: usize, d: usize| target.contains(&(c, d));
    let mut moved: Vec<((usize, usize), i64)> = vec![((b, a), -1)];
    for (c, d) in i.normal_set() {
        if in_j(c, d) {
            moved.push(((c, d), 1));
        } else if c == a {
            moved.push(((b, d), 1));
        } else if d == b {
            moved.push(((c, a), -1));
        } else {
            panic!("unexpected normal pair ({}, {}) for {} -> {}", c, d, i, j);
        }
    }
    assert_eq!(moved.len(), target.len(), "basis sizes differ for {} -> {}", i, j);
    let perm: Vec<usize> = moved
        .iter()
        .map(|(pair, _)| target.iter().position(|t| t == pair).expect("pair missing"))
        .collect();
    let mut sign: i64 = moved.iter().map(|(_, s)| s).product();
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Number of semistandard fillings of `ν/λ` with content `μ` whose reverse
/// reading word is a lattice word.
pub fn lr_tableaux(lambda: &YoungDiagram, mu: &YoungDiagram, nu: &YoungDiagram) -> i64 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    let mut cells = Vec::new();
    for r in 1..=nu.len() {
        for c in lambda.row(r)..nu.row(r) {
            cells.push((r, c));
        }
    }
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut count = 0;
    fill(0, &cells, lambda, mu, nu, &mut filling, &mut count);
    count
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    nu: &YoungDiagram,
    filling: &mut BTreeMap<(usize, usize), usize>,
    count: &mut i64,
) {
    if idx == cells.len() {
        let mut content = vec![0usize; mu.len() + 1];
        for v in filling.values() {
            content[*v] += 1;
        }
        if (1..=mu.len()).any(|i| content[i] != mu.row(i)) {
            return;
        }
        // reverse reading word: rows top to bottom, each right to left
        let mut seen = vec![0usize; mu.len() + 2];
        for r in 1..=nu.len() {
            for c in (lambda.row(r)..nu.row(r)).rev() {
                let v = filling[&(r, c)];
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    return;
                }
            }
        }
        *count += 1;
        return;
    }
    let (r, c) = cells[idx];
    for v in 1..=mu.len() {
        if c > 0 {
            if let Some(&left) = filling.get(&(r, c - 1)) {
                if left > v {
                    continue;
                }
            }
        }
        if r > 1 {
            if let Some(&up) = filling.get(&(r - 1, c)) {
                if up >= v {
                    continue;
                }
            }
        }
        filling.insert((r, c), v);
        fill(idx + 1, cells, lambda, mu, nu, filling, count);
        filling.remove(&(r, c));
    }
}

/// Coefficient of the full `rows x cols` box in `σ_{(1^s)}^e`, computed by
/// adding vertical strips of size `s` one at a time.
pub fn column_strip_power(rows: usize, cols: usize, s: usize, e: usize) -> i64 {
    let mut states: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    states.insert(vec![0; rows], 1);
    for _ in 0..e {
        let mut next = BTreeMap::new();
        for (lam, c) in &states {
            for mask in 0u32..(1 << rows) {
                if mask.count_ones() as usize != s {
                    continue;
                }
                let mu: Vec<usize> = (0..rows).map(|r| lam[r] + ((mask >> r) & 1) as usize).collect();
                if mu.iter().all(|&x| x <= cols) && mu.windows(2).all(|w| w[0] >= w[1]) {
                    *next.entry(mu).or_insert(0) += c;
                }
            }
        }
        states = next;
    }
    states.get(&vec![cols; rows]).copied().unwrap_or(0)
}

/// The colored edges of the signed incidence graph of `Fl(R^4)`, from the
/// higher-dimensional cell to the lower one; `B` is `+2`, `R` is `-2`.
pub const FIGURE: &[(&str, &str, char)] = &[
    ("3421", "2431", 'R'),
    ("4231", "3241", 'R'),
    ("4231", "4132", 'R'),
    ("4312", "4213", 'R'),
    ("3412", "3214", 'R'),
    ("3412", "1432", 'B'),
    ("3241", "3142", 'R'),
    ("4132", "3142", 'B'),
    ("2341", "2143", 'R'),
    ("2413", "1423", 'B'),
    ("2413", "2314", 'R'),
    ("4123", "2143", 'B'),
    ("1342", "1243", 'B'),
    ("1423", "1324", 'B'),
    ("2314", "1324", 'B'),
    ("3124", "2134", 'B'),
];

/// Solves `ε_I ε_J = t_{IJ}` over `GF(2)` (signs as bits) with a
/// parity union-find; `None` if the system is inconsistent.
pub fn solve_gauge(constraints: &[(String, String, bool)]) -> Option<BTreeMap<String, bool>> {
    let mut parent: BTreeMap<String, (String, bool)> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<String, (String, bool)>, x: &str) -> (String, bool) {
        let (p, par) = parent
            .entry(x.to_string())
            .or_insert_with(|| (x.to_string(), false))
            .clone();
        if p == x {
            return (p, false);
        }
        let (root, rp) = find(parent, &p);
        let total = par ^ rp;
        parent.insert(x.to_string(), (root.clone(), total));
        (root, total)
    }
    for (a, b, flip) in constraints {
        let (ra, pa) = find(&mut parent, a);
        let (rb, pb) = find(&mut parent, b);
        if ra == rb {
            if pa ^ pb != *flip {
                return None;
            }
        } else {
            parent.insert(ra, (rb, pa ^ pb ^ flip));
        }
    }
    let keys: Vec<String> = parent.keys().cloned().collect();
    Some(keys.into_iter().map(|k| {
        let (_, p) = find(&mut parent, &k);
        (k, p)
    }).collect())
}

pub fn regauge(c: &GradedComplex, eps: &BTreeMap<String, bool>) -> Vec<SparseMatrix> {
    let sign = |p: &OrderedSetPartition| if eps.get(&p.compact()).copied().unwrap_or(false) { -1 } else { 1 };
    (0..c.top_degree())
        .map(|k| {
            let d = c.differential(k);
            let t: Vec<(usize, usize, i64)> = d
                .triplets()
                .into_iter()
                .map(|(r, col, v)| (r, col, v * sign(&c.cells(k + 1)[r]) * sign(&c.cells(k)[col])))
                .collect();
            SparseMatrix::from_triplets(d.nrows(), d.ncols(), &t)
        })
        .collect()
}
