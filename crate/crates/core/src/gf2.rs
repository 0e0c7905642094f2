//! Dense linear algebra over GF(2) on packed bit rows.

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        let words = ncols.div_ceil(64).max(1);
        BitMatrix {
            nrows,
            ncols,
            words,
            data: vec![0; nrows * words],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// `row[dst] ^= row[src]`.
    fn xor_rows(&mut self, dst: usize, src: usize) {
        let w = self.words;
        let (s, d) = (src * w, dst * w);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.nrows {
                break;
            }
            let Some(p) = (r..self.nrows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.nrows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Columns of a maximal independent set chosen greedily from the left.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().rref()
    }

    /// A basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![false; self.ncols];
                x[f] = true;
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        x[p] = true;
                    }
                }
                x
            })
            .collect()
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        (0..self.nrows)
            .map(|r| {
                let words = self.row_words(r);
                let mut acc = false;
                for (c, &xc) in x.iter().enumerate() {
                    if xc && words[c / 64] >> (c % 64) & 1 == 1 {
                        acc = !acc;
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self | extra columns]`.
    pub fn with_columns(&self, extra: &[Vec<bool>]) -> Self {
        let mut out = BitMatrix::zeros(self.nrows, self.ncols + extra.len());
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                if self.get(r, c) {
                    out.set(r, c, true);
                }
            }
            for (k, col) in extra.iter().enumerate() {
                if col[r] {
                    out.set(r, self.ncols + k, true);
                }
            }
        }
        out
    }
}
