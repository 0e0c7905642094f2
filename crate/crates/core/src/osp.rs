//! Dimension vectors, ordered set partitions (Schubert cell labels) and Young diagrams.
//!
//! Positions and block numbers are 1-based in the public API, matching the usual
//! notation `I = (I_1, ..., I_m)` for a partition of `{1, ..., N}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Block sizes `D = (d_1, ..., d_m)` of a partial flag manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimVector(Vec<usize>);

impl DimVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDimVector("empty".into()));
        }
        if parts.iter().any(|&d| d == 0) {
            return Err(Error::InvalidDimVector(format!(
                "zero part in {:?}",
                parts
            )));
        }
        if parts.len() > u8::MAX as usize {
            return Err(Error::InvalidDimVector("too many blocks".into()));
        }
        Ok(DimVector(parts))
    }

    /// `D = (1, ..., 1)`, the complete flag manifold of `R^n`.
    pub fn complete(n: usize) -> Self {
        DimVector(vec![1; n.max(1)])
    }

    /// `D = (k, n - k)`, the Grassmannian of k-planes.
    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidDimVector(format!("Gr_{}(R^{})", k, n)));
        }
        Ok(DimVector(vec![k, n - k]))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn num_blocks(&self) -> usize {
        self.0.len()
    }

    /// Ambient dimension `N = d_1 + ... + d_m`.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Real dimension `(N^2 - sum d_i^2) / 2` of the flag manifold.
    pub fn dim(&self) -> usize {
        let n = self.n();
        (n * n - self.0.iter().map(|d| d * d).sum::<usize>()) / 2
    }

    /// Partial sums `(s_1, ..., s_m)`, `s_i = d_1 + ... + d_i`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |s, &d| {
                *s += d;
                Some(*s)
            })
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.0.iter().all(|&d| d == 1)
    }

    /// Orientable iff all parts share the parity of `N`.
    pub fn is_orientable(&self) -> bool {
        let n = self.n();
        self.0.iter().all(|d| d % 2 == n % 2)
    }

    /// `2D`.
    pub fn double(&self) -> Self {
        DimVector(self.0.iter().map(|d| 2 * d).collect())
    }

    /// `D / 2`, if every part is even.
    pub fn half(&self) -> Option<Self> {
        self.is_even()
            .then(|| DimVector(self.0.iter().map(|d| d / 2).collect()))
    }

    /// `(d_1, ..., d_{m-1}, d_m + extra)`.
    pub fn stabilize(&self, extra: usize) -> Self {
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += extra;
        DimVector(parts)
    }

    /// All compositions of `n` into positive parts.
    pub fn compositions(n: usize) -> Vec<DimVector> {
        if n == 0 {
            return Vec::new();
        }
        (0u32..1 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut cur = 1;
                for i in 0..n - 1 {
                    if mask >> i & 1 == 1 {
                        parts.push(cur);
                        cur = 1;
                    } else {
                        cur += 1;
                    }
                }
                parts.push(cur);
                DimVector(parts)
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for DimVector {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        DimVector::new(v)
    }
}

impl From<DimVector> for Vec<usize> {
    fn from(d: DimVector) -> Vec<usize> {
        d.0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for DimVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad dimension vector entry {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        DimVector::new(parts)
    }
}

/// An ordered set partition `I = (I_1, ..., I_m)` of `{1, ..., N}`, stored as
/// its block function `i -> I(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    block: Vec<u8>,
}

/// Adjacent cells `J < I` with `ℓ(J) = ℓ(I) - 1`: `J` is `I` with `a ∈ I_α` and
/// `b ∈ I_β` exchanged, where `a > b` and `α < β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacentPair {
    pub upper: OrderedSetPartition,
    pub lower: OrderedSetPartition,
    pub a: usize,
    pub b: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl OrderedSetPartition {
    /// Builds from 0-based block indices of the elements `1..=N`.
    pub fn from_block_function(block: Vec<u8>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty".into()));
        }
        let m = *block.iter().max().unwrap() as usize + 1;
        let mut seen = vec![false; m];
        for &b in &block {
            seen[b as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        Ok(OrderedSetPartition { block })
    }

    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        if n == 0 || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        if blocks.len() > u8::MAX as usize {
            return Err(Error::InvalidPartition("too many blocks".into()));
        }
        let mut block = vec![u8::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {} outside 1..={}",
                        x, n
                    )));
                }
                if block[x - 1] != u8::MAX {
                    return Err(Error::InvalidPartition(format!("element {} repeated", x)));
                }
                block[x - 1] = i as u8;
            }
        }
        Ok(OrderedSetPartition { block })
    }

    /// Builds from a one-line word, cut into blocks of sizes `D`.
    pub fn from_one_line(word: &[usize], dims: &DimVector) -> Result<Self> {
        if word.len() != dims.n() {
            return Err(Error::DimensionMismatch(format!(
                "word of length {} for D = {}",
                word.len(),
                dims
            )));
        }
        let mut blocks = Vec::new();
        let mut rest = word;
        for &d in dims.parts() {
            let (head, tail) = rest.split_at(d);
            blocks.push(head.to_vec());
            rest = tail;
        }
        Self::from_blocks(&blocks)
    }

    /// The minimal cell `(1..d_1 | ...)`, i.e. the point cell.
    pub fn identity(dims: &DimVector) -> Self {
        let mut block = Vec::with_capacity(dims.n());
        for (i, &d) in dims.parts().iter().enumerate() {
            block.extend(std::iter::repeat(i as u8).take(d));
        }
        OrderedSetPartition { block }
    }

    /// The open cell: the blocks of the identity in reverse position order.
    pub fn longest(dims: &DimVector) -> Self {
        let mut block = Self::identity(dims).block;
        block.reverse();
        OrderedSetPartition { block }
    }

    pub fn n(&self) -> usize {
        self.block.len()
    }

    pub fn num_blocks(&self) -> usize {
        *self.block.iter().max().unwrap() as usize + 1
    }

    pub fn dims(&self) -> DimVector {
        let mut parts = vec![0; self.num_blocks()];
        for &b in &self.block {
            parts[b as usize] += 1;
        }
        DimVector(parts)
    }

    /// `I(i)`: the 1-based block containing the 1-based element `i`.
    #[inline]
    pub fn block_of(&self, i: usize) -> usize {
        self.block[i - 1] as usize + 1
    }

    /// 0-based block indices of the elements `1..=N`.
    pub fn block_function(&self) -> &[u8] {
        &self.block
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.block.iter().enumerate() {
            out[b as usize].push(i + 1);
        }
        out
    }

    /// The blocks concatenated, each listed increasingly.
    pub fn one_line(&self) -> Vec<usize> {
        self.blocks().concat()
    }

    /// `ℓ(I) = #{(a, b) : a > b, I(a) < I(b)}`, the dimension of the cell.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for a in 0..n {
            for b in 0..a {
                if self.block[a] < self.block[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Codimension `dim Fl_D - ℓ(I)`, the cochain degree of the cell.
    pub fn codim(&self) -> usize {
        self.dims().dim() - self.inversions()
    }

    /// `r_I(i, k) = #{l ∈ I_1 ∪ ... ∪ I_i : l <= k}`.
    pub fn rank(&self, i: usize, k: usize) -> usize {
        self.block[..k].iter().filter(|&&b| (b as usize) < i).count()
    }

    /// Rank table `r[i-1][k-1]` for `1 <= i < m`, `1 <= k <= N`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        let m = self.num_blocks();
        (1..m)
            .map(|i| {
                let mut acc = 0;
                self.block
                    .iter()
                    .map(|&b| {
                        if (b as usize) < i {
                            acc += 1;
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Bruhat order `self <= other`: the closure of `Ω_other` contains `Ω_self`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        if self.dims() != other.dims() {
            return false;
        }
        let mine = self.rank_table();
        let theirs = other.rank_table();
        mine.iter()
            .zip(&theirs)
            .all(|(r, s)| r.iter().zip(s).all(|(x, y)| x >= y))
    }

    /// `I` with the elements `a` and `b` exchanged between their blocks.
    pub fn swap(&self, a: usize, b: usize) -> Self {
        let mut block = self.block.clone();
        block.swap(a - 1, b - 1);
        OrderedSetPartition { block }
    }

    /// All `J` with `J < I` and `ℓ(J) = ℓ(I) - 1`.
    pub fn adjacent_below(&self) -> Vec<AdjacentPair> {
        let n = self.n();
        let mut out = Vec::new();
        for b in 0..n {
            for a in b + 1..n {
                let (alpha, beta) = (self.block[a], self.block[b]);
                if alpha >= beta {
                    continue;
                }
                let blocked = self.block[b + 1..a]
                    .iter()
                    .any(|&g| alpha <= g && g <= beta);
                if !blocked {
                    out.push(AdjacentPair {
                        upper: self.clone(),
                        lower: self.swap(a + 1, b + 1),
                        a: a + 1,
                        b: b + 1,
                        alpha: alpha as usize + 1,
                        beta: beta as usize + 1,
                    });
                }
            }
        }
        out
    }

    /// All `J` with `J > I` and `ℓ(J) = ℓ(I) + 1`, as pairs whose `lower` is `I`.
    pub fn adjacent_above(&self) -> Vec<AdjacentPair> {
        let n = self.n();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                let (lo, hi) = (self.block[p], self.block[q]);
                if lo >= hi {
                    continue;
                }
                let blocked = self.block[p + 1..q].iter().any(|&g| lo <= g && g <= hi);
                if !blocked {
                    out.push(AdjacentPair {
                        upper: self.swap(p + 1, q + 1),
                        lower: self.clone(),
                        a: q + 1,
                        b: p + 1,
                        alpha: lo as usize + 1,
                        beta: hi as usize + 1,
                    });
                }
            }
        }
        out
    }

    /// If `J` is adjacent below `self`, the exchanged pair.
    pub fn adjacency_with(&self, lower: &Self) -> Option<AdjacentPair> {
        if self.n() != lower.n() {
            return None;
        }
        let diff: Vec<usize> = (0..self.n())
            .filter(|&i| self.block[i] != lower.block[i])
            .collect();
        if diff.len() != 2 {
            return None;
        }
        let (b, a) = (diff[0] + 1, diff[1] + 1);
        if self.swap(a, b) != *lower {
            return None;
        }
        self.adjacent_below()
            .into_iter()
            .find(|p| p.a == a && p.b == b)
    }

    /// Tangent pairs `T_I = {(c, d) : c > d, I(c) < I(d)}`, lexicographic.
    pub fn tangent_set(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for c in 1..=n {
            for d in 1..c {
                if self.block_of(c) < self.block_of(d) {
                    out.push((c, d));
                }
            }
        }
        out
    }

    /// Normal pairs `N_I = {(c, d) : c < d, I(c) < I(d)}`, lexicographic.
    pub fn normal_set(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for c in 1..=n {
            for d in c + 1..=n {
                if self.block_of(c) < self.block_of(d) {
                    out.push((c, d));
                }
            }
        }
        out
    }

    /// `I^∨ = (w_0 I_1, ..., w_0 I_m)` with `w_0(k) = N + 1 - k`.
    pub fn dual(&self) -> Self {
        let mut block = self.block.clone();
        block.reverse();
        OrderedSetPartition { block }
    }

    /// `DI`: every element `i` replaced by the pair `2i - 1, 2i`.
    pub fn double(&self) -> Self {
        OrderedSetPartition {
            block: self.block.iter().flat_map(|&b| [b, b]).collect(),
        }
    }

    /// The `I` with `DI = self`, if `self` is a doubled partition.
    pub fn halve(&self) -> Option<Self> {
        if self.n() % 2 != 0 {
            return None;
        }
        let block: Vec<u8> = self
            .block
            .chunks(2)
            .map(|p| (p[0] == p[1]).then_some(p[0]))
            .collect::<Option<_>>()?;
        Some(OrderedSetPartition { block })
    }

    /// `I^m = (I_1, ..., I_{r-1}, I_r ∪ {N+1, ..., N+m})`.
    pub fn stabilize(&self, extra: usize) -> Self {
        let last = self.num_blocks() as u8 - 1;
        let mut block = self.block.clone();
        block.extend(std::iter::repeat(last).take(extra));
        OrderedSetPartition { block }
    }

    /// Compact label: bare one-line word for complete flags with `N <= 9`,
    /// the bar form otherwise.
    pub fn compact(&self) -> String {
        if self.n() <= 9 && self.num_blocks() == self.n() {
            self.one_line().iter().map(|x| x.to_string()).collect()
        } else {
            self.to_string()
        }
    }

    /// Parses either the bar form `"3 6|1 4|2 5"` or, for a complete flag,
    /// the bare word `"4321"`. Separated elements without a bar form one block.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('|') || s.contains(|c: char| c == ',' || c.is_whitespace()) {
            let blocks = s
                .split('|')
                .map(|blk| {
                    blk.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| {
                            t.parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad element {:?}", t)))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Self::from_blocks(&blocks)
        } else if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() && c != '0') {
            let blocks: Vec<Vec<usize>> = s
                .chars()
                .map(|c| vec![c.to_digit(10).unwrap() as usize])
                .collect();
            Self::from_blocks(&blocks)
        } else {
            Err(Error::Parse(format!("cannot read {:?} as a partition", s)))
        }
    }

    /// Parses and checks the block sizes against `D`.
    pub fn parse_with(s: &str, dims: &DimVector) -> Result<Self> {
        let p = Self::parse(s)?;
        if p.dims() != *dims {
            return Err(Error::DimensionMismatch(format!(
                "{} has block sizes {}, expected {}",
                p,
                p.dims(),
                dims
            )));
        }
        Ok(p)
    }

    /// All partitions with block sizes `D`, in lexicographic order of their
    /// one-line words.
    pub fn enumerate(dims: &DimVector) -> Vec<Self> {
        let n = dims.n();
        let mut out = Vec::new();
        let mut block = vec![0u8; n];
        let remaining: Vec<usize> = (0..n).collect();
        fill_blocks(dims.parts(), 0, &remaining, &mut block, &mut out);
        out
    }
}

fn fill_blocks(
    parts: &[usize],
    idx: usize,
    remaining: &[usize],
    block: &mut Vec<u8>,
    out: &mut Vec<OrderedSetPartition>,
) {
    if idx == parts.len() {
        out.push(OrderedSetPartition {
            block: block.clone(),
        });
        return;
    }
    let k = parts[idx];
    let r = remaining.len();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let mut rest = Vec::with_capacity(r - k);
        let mut j = 0;
        for (pos, &x) in remaining.iter().enumerate() {
            if j < k && combo[j] == pos {
                block[x] = idx as u8;
                j += 1;
            } else {
                rest.push(x);
            }
        }
        fill_blocks(parts, idx + 1, &rest, block, out);
        let mut i = k;
        while i > 0 && combo[i - 1] == r - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        combo[i - 1] += 1;
        for t in i..k {
            combo[t] = combo[t - 1] + 1;
        }
    }
}

impl Ord for OrderedSetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dims()
            .cmp(&other.dims())
            .then_with(|| self.one_line().cmp(&other.one_line()))
    }
}

impl PartialOrd for OrderedSetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for OrderedSetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OrderedSetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A partition `λ_1 >= λ_2 >= ... > 0`, trailing zeros dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!("{:?} is not weakly decreasing", rows)));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `λ_j` for 1-based `j`, zero past the last row.
    pub fn row(&self, j: usize) -> usize {
        self.rows.get(j - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn fits(&self, height: usize, width: usize) -> bool {
        self.rows.len() <= height && self.row(1) <= width
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.rows.len() <= self.rows.len()
            && other.rows.iter().zip(&self.rows).all(|(o, s)| o <= s)
    }

    pub fn conjugate(&self) -> Self {
        let w = self.row(1);
        YoungDiagram {
            rows: (1..=w)
                .map(|c| self.rows.iter().filter(|&&r| r >= c).count())
                .collect(),
        }
    }

    /// Every box subdivided into a 2x2 square.
    pub fn double(&self) -> Self {
        YoungDiagram {
            rows: self.rows.iter().flat_map(|&r| [2 * r, 2 * r]).collect(),
        }
    }

    /// The `λ` with `Dλ = self`, if any.
    pub fn halve(&self) -> Option<Self> {
        if self.rows.len() % 2 != 0 {
            return None;
        }
        let rows: Vec<usize> = self
            .rows
            .chunks(2)
            .map(|p| (p[0] == p[1] && p[0] % 2 == 0).then_some(p[0] / 2))
            .collect::<Option<_>>()?;
        Some(YoungDiagram { rows })
    }

    /// Rows `j` (1-based) where a box can be added inside the `height x width` box.
    pub fn addable_rows(&self, height: usize, width: usize) -> Vec<usize> {
        (1..=height)
            .filter(|&j| self.row(j) < width && (j == 1 || self.row(j - 1) > self.row(j)))
            .collect()
    }

    pub fn add_box(&self, j: usize) -> Self {
        let mut rows = self.rows.clone();
        if rows.len() < j {
            rows.resize(j, 0);
        }
        rows[j - 1] += 1;
        YoungDiagram { rows }
    }

    /// `Lλ = (N-K+1, λ_1+1, ..., λ_K+1)`: from the `K x (N-K)` box to the
    /// `(K+1) x (N-K+1)` box.
    pub fn l_operation(&self, k: usize, n: usize) -> Result<Self> {
        if k > n || !self.fits(k, n - k) {
            return Err(Error::InvalidDiagram(format!(
                "{} does not fit in {} x {}",
                self,
                k,
                n.saturating_sub(k)
            )));
        }
        let mut rows = vec![n - k + 1];
        rows.extend((1..=k).map(|j| self.row(j) + 1));
        Ok(YoungDiagram { rows })
    }

    /// Inverse of [`YoungDiagram::l_operation`] into the `k x (n-k)` box.
    pub fn l_inverse(&self, k: usize, n: usize) -> Option<Self> {
        if self.row(1) != n - k + 1 || self.rows.len() != k + 1 {
            return None;
        }
        YoungDiagram::new(self.rows[1..].iter().map(|r| r - 1).collect()).ok()
    }

    /// The 2-block partition of `{1..N}` with `λ_j = N - K + j - I_j`, where
    /// `I_1 < ... < I_K` are the elements of the first block.
    pub fn to_osp(&self, k: usize, n: usize) -> Result<OrderedSetPartition> {
        if k == 0 || k >= n || !self.fits(k, n - k) {
            return Err(Error::InvalidDiagram(format!(
                "{} does not fit in {} x {}",
                self,
                k,
                n.saturating_sub(k)
            )));
        }
        let first: Vec<usize> = (1..=k).map(|j| n - k + j - self.row(j)).collect();
        let second: Vec<usize> = (1..=n).filter(|x| !first.contains(x)).collect();
        OrderedSetPartition::from_blocks(&[first, second])
    }

    /// Inverse of [`YoungDiagram::to_osp`].
    pub fn from_osp(p: &OrderedSetPartition) -> Result<Self> {
        if p.num_blocks() != 2 {
            return Err(Error::InvalidPartition(format!("{} is not a Grassmannian cell", p)));
        }
        let n = p.n();
        let first = &p.blocks()[0];
        let k = first.len();
        YoungDiagram::new((1..=k).map(|j| n - k + j - first[j - 1]).collect())
    }

    /// All diagrams inside the `height x width` box.
    pub fn in_box(height: usize, width: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut rows = Vec::with_capacity(height);
        box_rec(height, width, &mut rows, &mut out);
        out
    }
}

fn box_rec(height: usize, width: usize, rows: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
    if rows.len() == height {
        out.push(YoungDiagram::new(rows.clone()).unwrap());
        return;
    }
    let cap = rows.last().copied().unwrap_or(width);
    for r in (0..=cap).rev() {
        rows.push(r);
        box_rec(height, width, rows, out);
        rows.pop();
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows)
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
