//! Cohomology of a [`GradedComplex`] over `Z`, `Q` and `GF(2)`, with
//! membership tests for Schubert cocycles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::osp::{DimVector, OrderedSetPartition};
use crate::poincare::IntPolynomial;
use crate::snf::{invariant_factors, smith_dense, smith_with_transforms, DenseMatrix};
use crate::vassiliev::{GradedComplex, SchubertElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coefficients {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "GF2")]
    Gf2,
}

impl FromStr for Coefficients {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" | "int" | "integers" => Ok(Coefficients::Integers),
            "q" | "rational" | "rationals" => Ok(Coefficients::Rationals),
            "gf2" | "f2" | "z2" | "mod2" => Ok(Coefficients::Gf2),
            _ => Err(Error::Parse(format!("unknown coefficients {:?}", s))),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Integers => "Z",
            Coefficients::Rationals => "Q",
            Coefficients::Gf2 => "GF(2)",
        })
    }
}

fn big_as_json<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let items: Vec<serde_json::Value> = v
        .iter()
        .map(|x| match x.to_i64() {
            Some(i) => serde_json::Value::from(i),
            None => serde_json::Value::from(x.to_string()),
        })
        .collect();
    items.serialize(s)
}

/// One torsion summand `Z/order` with a representing cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionGenerator {
    pub order: String,
    pub cocycle: SchubertElement,
}

/// `H^k`: free rank (or dimension over a field) and torsion orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeGroup {
    pub degree: usize,
    pub rank: usize,
    #[serde(serialize_with = "big_as_json")]
    pub torsion: Vec<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_generators: Option<Vec<SchubertElement>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_generators: Option<Vec<TorsionGenerator>>,
}

impl DegreeGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for DegreeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let j = (i..self.torsion.len())
                .find(|&j| self.torsion[j] != self.torsion[i])
                .unwrap_or(self.torsion.len());
            if j - i == 1 {
                parts.push(format!("Z{}", self.torsion[i]));
            } else {
                parts.push(format!("Z{}^{}", self.torsion[i], j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Cohomology groups of a complex in every degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    #[serde(rename = "D")]
    pub dims: DimVector,
    pub coefficients: Coefficients,
    pub groups: Vec<DegreeGroup>,
}

impl CohomologyReport {
    /// `Σ rank H^k t^k` (dimensions for field coefficients).
    pub fn poincare(&self) -> IntPolynomial {
        IntPolynomial::new(self.groups.iter().map(|g| g.rank as i64).collect())
    }

    /// `Σ #{torsion summands of H^k} t^k`.
    pub fn torsion_counts(&self) -> IntPolynomial {
        IntPolynomial::new(self.groups.iter().map(|g| g.torsion.len() as i64).collect())
    }

    /// All torsion orders found.
    pub fn torsion_orders(&self) -> Vec<BigInt> {
        self.groups.iter().flat_map(|g| g.torsion.clone()).collect()
    }

    pub fn render_table(&self) -> String {
        let field = match self.coefficients {
            Coefficients::Integers => None,
            Coefficients::Rationals => Some("Q"),
            Coefficients::Gf2 => Some("GF2"),
        };
        let mut s = format!("H^*(Fl({}); {})\n", self.dims, self.coefficients);
        for g in &self.groups {
            let group = match field {
                None => g.to_string(),
                Some(_) if g.rank == 0 => "0".to_string(),
                Some(fname) if g.rank == 1 => fname.to_string(),
                Some(fname) => format!("{}^{}", fname, g.rank),
            };
            s.push_str(&format!("H^{:<3} = {}\n", g.degree, group));
            for x in g.free_generators.iter().flatten() {
                s.push_str(&format!("        free: {}\n", x));
            }
            for t in g.torsion_generators.iter().flatten() {
                s.push_str(&format!("        Z{}:  {}\n", t.order, t.cocycle));
            }
        }
        s
    }
}

/// Invariant factors of every differential `d_0, ..., d_{top-1}`.
pub fn differential_factors(c: &GradedComplex) -> Vec<Vec<BigInt>> {
    (0..c.top_degree())
        .into_par_iter()
        .map(|k| invariant_factors(&c.differential(k)))
        .collect()
}

/// Cohomology groups; with `generators`, representing cocycles as well.
pub fn cohomology(c: &GradedComplex, coeffs: Coefficients, generators: bool) -> Result<CohomologyReport> {
    let top = c.top_degree();
    let counts = c.cell_counts();
    let groups = match coeffs {
        Coefficients::Integers | Coefficients::Rationals => {
            let factors = differential_factors(c);
            let rank = |k: Option<usize>| k.and_then(|k| factors.get(k)).map_or(0, |f| f.len());
            (0..=top)
                .map(|k| {
                    let free = counts[k] - rank(Some(k)) - rank(k.checked_sub(1));
                    let torsion = if coeffs == Coefficients::Integers && k > 0 {
                        factors[k - 1].iter().filter(|f| !f.is_one()).cloned().collect()
                    } else {
                        Vec::new()
                    };
                    let mut g = DegreeGroup {
                        degree: k,
                        rank: free,
                        torsion,
                        free_generators: None,
                        torsion_generators: None,
                    };
                    if generators {
                        let (free_gens, tors_gens) = integral_generators(c, k)?;
                        debug_assert_eq!(free_gens.len(), free);
                        g.free_generators = Some(free_gens);
                        if coeffs == Coefficients::Integers {
                            g.torsion_generators = Some(tors_gens);
                        }
                    }
                    Ok(g)
                })
                .collect::<Result<Vec<_>>>()?
        }
        Coefficients::Gf2 => {
            let ranks: Vec<usize> = (0..top)
                .into_par_iter()
                .map(|k| c.differential(k).to_gf2(1).rank())
                .collect();
            let rank = |k: Option<usize>| k.and_then(|k| ranks.get(k)).copied().unwrap_or(0);
            (0..=top)
                .map(|k| {
                    let dim = counts[k] - rank(Some(k)) - rank(k.checked_sub(1));
                    let free_generators = generators.then(|| gf2_generators(c, k));
                    DegreeGroup {
                        degree: k,
                        rank: dim,
                        torsion: Vec::new(),
                        free_generators,
                        torsion_generators: None,
                    }
                })
                .collect()
        }
    };
    Ok(CohomologyReport {
        dims: c.dims().clone(),
        coefficients: coeffs,
        groups,
    })
}

fn element_from_big(c: &GradedComplex, v: &[BigInt], k: usize) -> Result<SchubertElement> {
    let small: Vec<i64> = v
        .iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::DimensionMismatch("generator coefficient exceeds i64".into()))
        })
        .collect::<Result<_>>()?;
    Ok(c.from_vector(&small, k))
}

/// Free and torsion generators of `H^k(C; Z)`.
///
/// With `U d_{k-1} V = S`, the columns `u_i` of `U^{-1}` satisfy
/// `im d_{k-1} = span(s_i u_i)`; torsion is generated by the `u_i` with
/// `s_i > 1`, and a free part by the kernel of `d_k` on the remaining `u_i`.
fn integral_generators(
    c: &GradedComplex,
    k: usize,
) -> Result<(Vec<SchubertElement>, Vec<TorsionGenerator>)> {
    let n = c.cells(k).len();
    let smith = smith_with_transforms(&c.incoming(k));
    let r = smith.rank();
    let mut torsion = Vec::new();
    for (i, s) in smith.diag.iter().enumerate() {
        if !s.is_one() {
            let col: Vec<BigInt> = smith.u_inv.iter().map(|row| row[i].clone()).collect();
            torsion.push(TorsionGenerator {
                order: s.to_string(),
                cocycle: element_from_big(c, &col, k)?,
            });
        }
    }
    let rest = n - r;
    if rest == 0 {
        return Ok((Vec::new(), torsion));
    }
    let d = c.differential(k);
    // B' = d_k * U^{-1}[:, r..]
    let mut b: DenseMatrix = vec![vec![BigInt::zero(); rest]; d.nrows()];
    for (row, entries) in d.rows().iter().enumerate() {
        for &(col, v) in entries {
            for j in 0..rest {
                let u = &smith.u_inv[col as usize][r + j];
                if !u.is_zero() {
                    b[row][j] += u * v;
                }
            }
        }
    }
    let kernel = smith_dense(b, d.nrows(), rest);
    let kr = kernel.rank();
    let mut free = Vec::new();
    for j in kr..rest {
        let y: Vec<BigInt> = kernel.v.iter().map(|row| row[j].clone()).collect();
        let x: Vec<BigInt> = (0..n)
            .map(|i| (0..rest).map(|t| &smith.u_inv[i][r + t] * &y[t]).sum())
            .collect();
        free.push(element_from_big(c, &x, k)?);
    }
    Ok((free, torsion))
}

fn gf2_generators(c: &GradedComplex, k: usize) -> Vec<SchubertElement> {
    let image = c.incoming(k).to_gf2(1);
    let img_cols: Vec<Vec<bool>> = image
        .pivot_columns()
        .into_iter()
        .map(|j| (0..image.nrows()).map(|i| image.get(i, j)).collect())
        .collect();
    let kernel = c.differential(k).to_gf2(1).kernel();
    let mut basis = img_cols.clone();
    let mut out = Vec::new();
    let n = c.cells(k).len();
    for v in kernel {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if BitMatrix::zeros(n, 0).with_columns(&trial).rank() == trial.len() {
            basis = trial;
            let coeffs: Vec<i64> = v.iter().map(|&b| b as i64).collect();
            out.push(c.from_vector(&coeffs, k));
        }
    }
    out
}

fn homogeneous_degree(x: &SchubertElement) -> Result<Option<usize>> {
    if x.is_zero() {
        return Ok(None);
    }
    x.degree()
        .map(Some)
        .ok_or_else(|| Error::DimensionMismatch("inhomogeneous element".into()))
}

/// `d x = 0`.
pub fn is_cocycle(c: &GradedComplex, x: &SchubertElement) -> Result<bool> {
    Ok(c.apply_d(x)?.is_zero())
}

/// `x ∈ im d` over `Z`.
pub fn is_coboundary(c: &GradedComplex, x: &SchubertElement) -> Result<bool> {
    let Some(k) = homogeneous_degree(x)? else {
        return Ok(true);
    };
    let v = c.to_vector(x, k)?;
    let a = c.incoming(k);
    let before = invariant_factors(&a);
    let after = invariant_factors(&a.with_columns(&[v]));
    let prod = |f: &[BigInt]| f.iter().fold(BigInt::one(), |p, x| p * x);
    Ok(before.len() == after.len() && prod(&before) == prod(&after))
}

/// `x` is a cocycle whose class in `H^*(; Q)` is nonzero.
pub fn rational_class_nonzero(c: &GradedComplex, x: &SchubertElement) -> Result<bool> {
    let Some(k) = homogeneous_degree(x)? else {
        return Ok(false);
    };
    if !is_cocycle(c, x)? {
        return Ok(false);
    }
    let v = c.to_vector(x, k)?;
    let a = c.incoming(k);
    Ok(crate::snf::rank(&a.with_columns(&[v])) > crate::snf::rank(&a))
}

/// The classes of `xs` (all of degree `k`) are linearly independent in `H^k(; Q)`.
pub fn classes_independent(c: &GradedComplex, xs: &[SchubertElement], k: usize) -> Result<bool> {
    let cols = xs
        .iter()
        .map(|x| c.to_vector(x, k))
        .collect::<Result<Vec<_>>>()?;
    let a = c.incoming(k);
    Ok(crate::snf::rank(&a.with_columns(&cols)) == crate::snf::rank(&a) + xs.len())
}

/// Cells with `d Ω_I = 0`: Schubert varieties that are integral cycles.
pub fn cycle_schubert_varieties(c: &GradedComplex) -> Vec<OrderedSetPartition> {
    (0..=c.top_degree())
        .flat_map(|k| {
            let d = c.differential(k);
            let mut nonzero = vec![false; c.cells(k).len()];
            for (_, col, _) in d.triplets() {
                nonzero[col] = true;
            }
            c.cells(k)
                .iter()
                .zip(nonzero)
                .filter(|(_, nz)| !nz)
                .map(|(p, _)| p.clone())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Cycles that are also not hit by any nonzero incidence: each spans a free
/// summand of integral cohomology.
pub fn isolated_cycles(c: &GradedComplex) -> Vec<OrderedSetPartition> {
    (0..=c.top_degree())
        .flat_map(|k| {
            let mut touched = vec![false; c.cells(k).len()];
            for (_, col, _) in c.differential(k).triplets() {
                touched[col] = true;
            }
            for (row, _, _) in c.incoming(k).triplets() {
                touched[row] = true;
            }
            c.cells(k)
                .iter()
                .zip(touched)
                .filter(|(_, t)| !t)
                .map(|(p, _)| p.clone())
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fl4_integral() {
        let c = GradedComplex::build(&DimVector::complete(4)).unwrap();
        let h = cohomology(&c, Coefficients::Integers, false).unwrap();
        let shown: Vec<String> = h.groups.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["Z", "0", "Z2^3", "Z^2 + Z2^2", "Z2^2", "Z2^3", "Z"]);
    }

    #[test]
    fn rp2_generators() {
        let c = GradedComplex::build(&"1,2".parse().unwrap()).unwrap();
        let h = cohomology(&c, Coefficients::Integers, true).unwrap();
        assert_eq!(h.groups[0].rank, 1);
        assert_eq!(h.groups[2].torsion, vec![BigInt::from(2)]);
        let t = &h.groups[2].torsion_generators.as_ref().unwrap()[0];
        assert!(is_cocycle(&c, &t.cocycle).unwrap());
        assert!(!is_coboundary(&c, &t.cocycle).unwrap());
    }

    #[test]
    fn gf2_of_rp3() {
        let c = GradedComplex::build(&"1,3".parse().unwrap()).unwrap();
        let h = cohomology(&c, Coefficients::Gf2, true).unwrap();
        assert_eq!(h.poincare().coeffs(), &[1, 1, 1, 1]);
    }
}
