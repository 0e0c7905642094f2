//! Incidence coefficients `[Ω_I, Ω_J]` between adjacent Schubert cells.
//!
//! For `J` obtained from `I` by exchanging `a ∈ I_α` and `b ∈ I_β` (`a > b`,
//! `α < β`), the coefficient is `0` when `N_I(a, b)` is even and
//! `(-1)^(c1 + c2 + c3 + c4) * 2` otherwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::osp::{OrderedSetPartition, YoungDiagram};

/// `G_I(c, γ, δ) = #{d > c : γ < I(d) <= δ}`.
pub fn g_count(p: &OrderedSetPartition, c: usize, gamma: usize, delta: usize) -> usize {
    (c + 1..=p.n())
        .filter(|&d| {
            let x = p.block_of(d);
            gamma < x && x <= delta
        })
        .count()
}

/// `L_I(c, γ, δ) = #{d < c : γ < I(d) <= δ}`.
pub fn l_count(p: &OrderedSetPartition, c: usize, gamma: usize, delta: usize) -> usize {
    (1..c)
        .filter(|&d| {
            let x = p.block_of(d);
            gamma < x && x <= delta
        })
        .count()
}

/// `G_I(c, γ) = G_I(c, γ, m)`.
fn g_above(p: &OrderedSetPartition, c: usize, gamma: usize) -> usize {
    g_count(p, c, gamma, p.num_blocks())
}

/// `G_I(c) = G_I(c, I(c))`: the number of normal pairs `(c, d)` starting at `c`.
fn g_own(p: &OrderedSetPartition, c: usize) -> usize {
    g_above(p, c, p.block_of(c))
}

/// `N_I(a, b) = G_I(a, α, β) + L_I(b, α-1, β-1)` for `a > b`.
pub fn normal_count(p: &OrderedSetPartition, a: usize, b: usize) -> usize {
    let (alpha, beta) = (p.block_of(a), p.block_of(b));
    g_count(p, a, alpha, beta) + l_count(p, b, alpha - 1, beta - 1)
}

/// `T_I(a, b) = L_I(a, α, β) + G_I(b, α-1, β-1)` for `a < b`, `α = I(a) < β = I(b)`.
pub fn tangent_count(p: &OrderedSetPartition, a: usize, b: usize) -> usize {
    let (alpha, beta) = (p.block_of(a), p.block_of(b));
    l_count(p, a, alpha, beta) + g_count(p, b, alpha - 1, beta - 1)
}

/// The four transposition and sign counts whose sum fixes the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignTerms {
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub c4: usize,
}

impl SignTerms {
    pub fn total(&self) -> usize {
        self.c1 + self.c2 + self.c3 + self.c4
    }

    pub fn sign(&self) -> i64 {
        if self.total() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sign terms for the exchange of `a ∈ I_α`, `b ∈ I_β`, `a > b`, `α < β`.
pub fn sign_terms(p: &OrderedSetPartition, a: usize, b: usize) -> SignTerms {
    let (alpha, beta) = (p.block_of(a), p.block_of(b));
    let g_a = g_own(p, a);
    let g_a_beta = g_above(p, a, beta);

    let c1 = g_above(p, b, alpha) - g_a + (1..b).map(|c| g_own(p, c)).sum::<usize>();
    let between: usize = (b + 1..a).map(|c| g_own(p, c)).sum();
    let c2 = (g_a - g_a_beta) * (between + g_a_beta);
    let c3 = (1..b)
        .filter(|&c| {
            let x = p.block_of(c);
            alpha <= x && x < beta
        })
        .map(|c| {
            let x = p.block_of(c);
            g_above(p, b, x) - g_above(p, a, x)
        })
        .sum();
    let c4 = l_count(p, b, alpha - 1, beta - 1) + 1;
    SignTerms { c1, c2, c3, c4 }
}

/// `[Ω_I, Ω_J]` with its parity witness `N_I(a, b)` and sign terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IncidenceCoefficient {
    pub value: i64,
    pub parity_witness: usize,
    pub sign_terms: SignTerms,
}

impl IncidenceCoefficient {
    /// `(-1)^s(I,J) * 2`: the value of the coefficient whenever it is nonzero.
    pub fn signed_value(&self) -> i64 {
        2 * self.sign_terms.sign()
    }
}

/// Full record for the exchange of `a ∈ I_α`, `b ∈ I_β`; the caller
/// guarantees adjacency.
pub fn incidence_coefficient(p: &OrderedSetPartition, a: usize, b: usize) -> IncidenceCoefficient {
    let parity_witness = normal_count(p, a, b);
    let sign_terms = sign_terms(p, a, b);
    let value = if parity_witness % 2 == 0 {
        0
    } else {
        2 * sign_terms.sign()
    };
    IncidenceCoefficient {
        value,
        parity_witness,
        sign_terms,
    }
}

/// `[Ω_I, Ω_J]` for `J = I` with `a` and `b` exchanged; the caller guarantees
/// adjacency.
pub fn incidence_at(p: &OrderedSetPartition, a: usize, b: usize) -> i64 {
    if normal_count(p, a, b) % 2 == 0 {
        0
    } else {
        2 * sign_terms(p, a, b).sign()
    }
}

/// `[Ω_I, Ω_J]` for adjacent `J < I`.
pub fn incidence(upper: &OrderedSetPartition, lower: &OrderedSetPartition) -> Result<i64> {
    let pair = upper
        .adjacency_with(lower)
        .ok_or_else(|| Error::NotAdjacent {
            upper: upper.to_string(),
            lower: lower.to_string(),
        })?;
    Ok(incidence_at(upper, pair.a, pair.b))
}

/// Coefficient in the dual (codimension-indexed) labelling, where `J` is
/// obtained from `I` by exchanging `a ∈ I_α`, `b ∈ I_β` with `a < b`, `α < β`
/// and `ℓ(J) = ℓ(I) + 1`. Equals `[Ω_{I^∨}, Ω_{J^∨}]`; it vanishes iff
/// `T_I(a, b)` is even.
pub fn incidence_dual(i: &OrderedSetPartition, j: &OrderedSetPartition) -> Result<i64> {
    incidence(&i.dual(), &j.dual())
}

/// Root-sum multiplicity `m` for the adjacent pair `J < I`.
///
/// Kocherlakota's complex is graded by cell dimension while this one is graded
/// by codimension, so the root-sum criterion is applied to the dual pair `J^∨ > I^∨`:
/// `σ(J^∨) - σ(I^∨) = m·φ`, where `σ(x)` sums the roots `e_i - e_j` (`i < j`,
/// `x(i) > x(j)`) over the inversions of `x` and `φ` is the root of the
/// exchanged transposition. The coefficient is `±2` iff `m` is even.
pub fn kocherlakota_m(upper: &OrderedSetPartition, lower: &OrderedSetPartition) -> Result<usize> {
    if upper.adjacency_with(lower).is_none() {
        return Err(Error::NotAdjacent {
            upper: upper.to_string(),
            lower: lower.to_string(),
        });
    }
    root_multiplicity(&lower.dual(), &upper.dual())
}

/// `m` with `σ(x) - σ(y) = m·e_{ba}` for `y` adjacent below `x`.
fn root_multiplicity(x: &OrderedSetPartition, y: &OrderedSetPartition) -> Result<usize> {
    let not_prop = || Error::NotAdjacent {
        upper: x.to_string(),
        lower: y.to_string(),
    };
    let pair = x.adjacency_with(y).ok_or_else(not_prop)?;
    let diff: Vec<i64> = root_sum(x)
        .iter()
        .zip(root_sum(y))
        .map(|(p, q)| p - q)
        .collect();
    let m = diff[pair.b - 1];
    let proportional = diff.iter().enumerate().all(|(idx, &v)| {
        if idx == pair.b - 1 {
            true
        } else if idx == pair.a - 1 {
            v == -m
        } else {
            v == 0
        }
    });
    if !proportional || m <= 0 {
        return Err(not_prop());
    }
    Ok(m as usize)
}

fn root_sum(p: &OrderedSetPartition) -> Vec<i64> {
    let n = p.n();
    let mut v = vec![0i64; n];
    for i in 1..=n {
        for j in i + 1..=n {
            if p.block_of(i) > p.block_of(j) {
                v[i - 1] += 1;
                v[j - 1] -= 1;
            }
        }
    }
    v
}

/// Nonvanishing of the Grassmannian coefficient when `μ = λ + □` in row `j`:
/// `[σ_μ, σ_λ] = ±2` iff `λ_j - j` is even.
pub fn grassmannian_nonzero(lambda: &YoungDiagram, j: usize) -> bool {
    (lambda.row(j) as i64 - j as i64).rem_euclid(2) == 0
}
