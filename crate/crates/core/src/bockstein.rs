//! The Bockstein `Sq^1 = (d / 2) mod 2` and the test that all torsion in
//! `H^*(Fl_D(R^N); Z)` has order two.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::homology::differential_factors;
use crate::osp::DimVector;
use crate::poincare::{rational_poincare, torsion_poincare, IntPolynomial};
use crate::vassiliev::{GradedComplex, SchubertElement};

/// `Sq^1 : C^k(; GF(2)) -> C^{k+1}(; GF(2))`, i.e. `d_k / 2` reduced mod 2.
pub fn sq1_matrix(c: &GradedComplex, k: usize) -> BitMatrix {
    c.differential(k).to_gf2(2)
}

fn sq1_ranks(c: &GradedComplex) -> Vec<usize> {
    (0..c.top_degree())
        .into_par_iter()
        .map(|k| sq1_matrix(c, k).rank())
        .collect()
}

/// Poincaré polynomial `P_β` of the cohomology of `(C^*(; GF(2)), Sq^1)`.
pub fn bockstein_poincare(c: &GradedComplex) -> IntPolynomial {
    let ranks = sq1_ranks(c);
    let rank = |k: Option<usize>| k.and_then(|k| ranks.get(k)).copied().unwrap_or(0);
    IntPolynomial::new(
        c.cell_counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| (n - rank(Some(k)) - rank(k.checked_sub(1))) as i64)
            .collect(),
    )
}

/// Outcome of the two independent tests for "all torsion has order 2".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionVerdict {
    #[serde(rename = "D")]
    pub dims: DimVector,
    /// `P_β`, from `Sq^1` ranks.
    pub bockstein: IntPolynomial,
    /// `P_0`, the rational Poincaré polynomial.
    pub rational: IntPolynomial,
    /// Free ranks found by Smith normal form.
    pub snf_rational: IntPolynomial,
    /// Number of torsion summands per degree found by Smith normal form.
    pub snf_torsion: IntPolynomial,
    /// `P_Tor = t/(1+t) (P_2 - P_0)`.
    pub predicted_torsion: IntPolynomial,
    /// Every invariant factor other than 1 equals 2.
    pub factors_all_two: bool,
    /// `P_β = P_0`.
    pub bockstein_matches: bool,
}

impl TorsionVerdict {
    pub fn holds(&self) -> bool {
        self.factors_all_two && self.bockstein_matches
    }
}

/// Runs both tests; they must agree, otherwise an error is returned.
pub fn torsion_verdict(c: &GradedComplex) -> Result<TorsionVerdict> {
    let dims = c.dims().clone();
    let factors = differential_factors(c);
    let two = BigInt::from(2);
    let factors_all_two = factors.iter().flatten().all(|f| f.is_one() || *f == two);
    let counts = c.cell_counts();
    let rank = |k: Option<usize>| k.and_then(|k| factors.get(k)).map_or(0, |f| f.len());
    let snf_rational = IntPolynomial::new(
        (0..counts.len())
            .map(|k| (counts[k] - rank(Some(k)) - rank(k.checked_sub(1))) as i64)
            .collect(),
    );
    let snf_torsion = IntPolynomial::new(
        (0..counts.len())
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    factors[k - 1].iter().filter(|f| !f.is_one()).count() as i64
                }
            })
            .collect(),
    );
    let bockstein = bockstein_poincare(c);
    let rational = rational_poincare(&dims);
    let bockstein_matches = bockstein == rational;
    if bockstein_matches != factors_all_two {
        return Err(Error::InconsistentVerdict {
            dims: dims.to_string(),
            detail: format!(
                "P_beta = {}, P_0 = {}, invariant factors all 2: {}",
                bockstein, rational, factors_all_two
            ),
        });
    }
    Ok(TorsionVerdict {
        predicted_torsion: torsion_poincare(&dims)?,
        dims,
        bockstein,
        rational,
        snf_rational,
        snf_torsion,
        factors_all_two,
        bockstein_matches,
    })
}

/// Torsion generators `d(Ω_I) / 2` for the cells `I` of a maximal set of
/// independent columns of `Sq^1`, indexed by degree. Requires the verdict.
pub fn torsion_generators(c: &GradedComplex) -> Result<Vec<Vec<SchubertElement>>> {
    let verdict = torsion_verdict(c)?;
    if !verdict.holds() {
        return Err(Error::InconsistentVerdict {
            dims: c.dims().to_string(),
            detail: "torsion is not all of order 2".into(),
        });
    }
    let mut out = vec![Vec::new(); c.top_degree() + 1];
    for k in 0..c.top_degree() {
        let d = c.differential(k);
        for col in sq1_matrix(c, k).pivot_columns() {
            let mut e = vec![0i64; c.cells(k).len()];
            e[col] = 1;
            let image: Vec<i64> = d.mul_vec(&e).into_iter().map(|v| v / 2).collect();
            out[k + 1].push(c.from_vector(&image, k + 1));
        }
    }
    Ok(out)
}
