//! The cochain complex of Schubert cells of `Fl_D(R^N)`.
//!
//! Cells are graded by codimension; `d_k : C^k -> C^{k+1}` sends `Ω_I` to
//! `Σ [Ω_I, Ω_J] Ω_J` over the cells `J` adjacent below `I`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::incidence_at;
use crate::matrix::SparseMatrix;
use crate::osp::{DimVector, OrderedSetPartition};

/// A formal integer combination of Schubert cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertElement {
    terms: BTreeMap<OrderedSetPartition, i64>,
}

impl SchubertElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cell(p: OrderedSetPartition) -> Self {
        let mut e = Self::new();
        e.add(p, 1);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (OrderedSetPartition, i64)>>(terms: I) -> Self {
        let mut e = Self::new();
        for (p, c) in terms {
            e.add(p, c);
        }
        e
    }

    pub fn add(&mut self, p: OrderedSetPartition, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, p: &OrderedSetPartition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedSetPartition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common codimension of the terms, if they share one.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|p| p.codim());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

impl std::fmt::Display for SchubertElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, &c)) in self.terms.iter().enumerate() {
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "[{}]", p)?;
        }
        Ok(())
    }
}

/// Schubert cells graded by codimension together with the differentials.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    dims: DimVector,
    cells: Vec<Vec<OrderedSetPartition>>,
    index: HashMap<OrderedSetPartition, (usize, usize)>,
    differentials: Vec<SparseMatrix>,
}

impl GradedComplex {
    /// Builds the complex and verifies `d^2 = 0`.
    pub fn build(dims: &DimVector) -> Result<Self> {
        let c = Self::build_unchecked(dims);
        c.check_d_squared()?;
        Ok(c)
    }

    /// Builds the complex without the `d^2 = 0` check.
    pub fn build_unchecked(dims: &DimVector) -> Self {
        let top = dims.dim();
        let mut cells = vec![Vec::new(); top + 1];
        for p in OrderedSetPartition::enumerate(dims) {
            let k = top - p.inversions();
            cells[k].push(p);
        }
        let index = index_cells(&cells);
        let differentials = (0..top)
            .into_par_iter()
            .map(|k| {
                let mut triplets = Vec::new();
                for (col, p) in cells[k].iter().enumerate() {
                    for pair in p.adjacent_below() {
                        let v = incidence_at(p, pair.a, pair.b);
                        if v != 0 {
                            let (deg, row) = index[&pair.lower];
                            debug_assert_eq!(deg, k + 1);
                            triplets.push((row, col, v));
                        }
                    }
                }
                SparseMatrix::from_triplets(cells[k + 1].len(), cells[k].len(), &triplets)
            })
            .collect();
        GradedComplex {
            dims: dims.clone(),
            cells,
            index,
            differentials,
        }
    }

    /// Fails with the first nonzero entry of some `d_{k+1} d_k`.
    pub fn check_d_squared(&self) -> Result<()> {
        for k in 0..self.differentials.len().saturating_sub(1) {
            let sq = self.differentials[k + 1].mul(&self.differentials[k]);
            if let Some((r, c, v)) = sq.triplets().into_iter().next() {
                return Err(Error::DifferentialSquare {
                    degree: k,
                    row: self.cells[k + 2][r].to_string(),
                    col: self.cells[k][c].to_string(),
                    value: v,
                });
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    /// Top degree, equal to the real dimension of the manifold.
    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn num_cells(&self) -> usize {
        self.cells.iter().map(|c| c.len()).sum()
    }

    pub fn cells(&self, k: usize) -> &[OrderedSetPartition] {
        self.cells.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    /// `(degree, position)` of a cell.
    pub fn position(&self, p: &OrderedSetPartition) -> Option<(usize, usize)> {
        self.index.get(p).copied()
    }

    /// `d_k : C^k -> C^{k+1}`; the zero map outside `0..top`.
    pub fn differential(&self, k: usize) -> SparseMatrix {
        match self.differentials.get(k) {
            Some(d) => d.clone(),
            None => SparseMatrix::zeros(self.cells(k + 1).len(), self.cells(k).len()),
        }
    }

    pub fn differential_ref(&self, k: usize) -> Option<&SparseMatrix> {
        self.differentials.get(k)
    }

    /// `d_{k-1} : C^{k-1} -> C^k`, the zero map from the zero group for `k = 0`.
    pub fn incoming(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            SparseMatrix::zeros(self.cells(0).len(), 0)
        } else {
            self.differential(k - 1)
        }
    }

    /// Coefficient vector of a homogeneous element of degree `k`.
    pub fn to_vector(&self, x: &SchubertElement, k: usize) -> Result<Vec<i64>> {
        let mut v = vec![0; self.cells(k).len()];
        for (p, c) in x.terms() {
            match self.index.get(p) {
                Some(&(deg, pos)) if deg == k => v[pos] += c,
                Some(&(deg, _)) => {
                    return Err(Error::DimensionMismatch(format!(
                        "{} has degree {}, expected {}",
                        p, deg, k
                    )))
                }
                None => {
                    return Err(Error::DimensionMismatch(format!(
                        "{} is not a cell of Fl({})",
                        p, self.dims
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &[i64], k: usize) -> SchubertElement {
        SchubertElement::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.cells[k][i].clone(), c)),
        )
    }

    /// `d x` for a homogeneous element `x`.
    pub fn apply_d(&self, x: &SchubertElement) -> Result<SchubertElement> {
        let Some(k) = x.degree() else {
            if x.is_zero() {
                return Ok(SchubertElement::new());
            }
            return Err(Error::DimensionMismatch("inhomogeneous element".into()));
        };
        let v = self.to_vector(x, k)?;
        if k >= self.differentials.len() {
            return Ok(SchubertElement::new());
        }
        Ok(self.from_vector(&self.differentials[k].mul_vec(&v), k + 1))
    }

    /// Nonzero incidences `(I, J, [Ω_I, Ω_J])`, `I` of degree `k`, `J` of degree `k + 1`.
    pub fn edges(&self) -> Vec<(OrderedSetPartition, OrderedSetPartition, i64)> {
        let mut out = Vec::new();
        for (k, d) in self.differentials.iter().enumerate() {
            for (r, c, v) in d.triplets() {
                out.push((self.cells[k][c].clone(), self.cells[k + 1][r].clone(), v));
            }
        }
        out
    }

    /// Graphviz rendering: vertices ranked by degree, `+2` edges blue, `-2` red.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"Fl({})\" {{", self.dims);
        let _ = writeln!(s, "  rankdir=TB;");
        let _ = writeln!(s, "  node [shape=plaintext];");
        for (k, cells) in self.cells.iter().enumerate() {
            let names: Vec<String> = cells.iter().map(|p| format!("\"{}\"", p.compact())).collect();
            let _ = writeln!(s, "  {{ rank=same; /* degree {} */ {}; }}", k, names.join("; "));
        }
        for (i, j, v) in self.edges() {
            let color = if v > 0 { "blue" } else { "red" };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [color={}, label=\"{:+}\"];",
                i.compact(),
                j.compact(),
                color,
                v
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ComplexJson::from(self)).expect("complex serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: ComplexJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let dims = DimVector::new(raw.dims)?;
        let cells: Vec<Vec<OrderedSetPartition>> = raw
            .degrees
            .iter()
            .map(|deg| {
                deg.iter()
                    .map(|s| OrderedSetPartition::parse_with(s, &dims))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let differentials = raw
            .differentials
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let (nr, nc) = (
                    cells.get(k + 1).map_or(0, |c| c.len()),
                    cells.get(k).map_or(0, |c| c.len()),
                );
                if t.iter().any(|&(r, c, _)| r >= nr || c >= nc) {
                    return Err(Error::Parse(format!("entry out of range in degree {}", k)));
                }
                Ok(SparseMatrix::from_triplets(nr, nc, t))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedComplex {
            index: index_cells(&cells),
            dims,
            cells,
            differentials,
        })
    }
}

fn index_cells(cells: &[Vec<OrderedSetPartition>]) -> HashMap<OrderedSetPartition, (usize, usize)> {
    let mut index = HashMap::new();
    for (k, deg) in cells.iter().enumerate() {
        for (i, p) in deg.iter().enumerate() {
            index.insert(p.clone(), (k, i));
        }
    }
    index
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    #[serde(rename = "D")]
    dims: Vec<usize>,
    degrees: Vec<Vec<String>>,
    differentials: Vec<Vec<(usize, usize, i64)>>,
}

impl From<&GradedComplex> for ComplexJson {
    fn from(c: &GradedComplex) -> Self {
        ComplexJson {
            dims: c.dims.parts().to_vec(),
            degrees: c
                .cells
                .iter()
                .map(|deg| deg.iter().map(|p| p.to_string()).collect())
                .collect(),
            differentials: c.differentials.iter().map(|d| d.triplets()).collect(),
        }
    }
}
