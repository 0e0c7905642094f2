//! Integer polynomials in `t` and the Poincaré polynomials of real flag manifolds.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::osp::DimVector;

/// A polynomial `Σ c_i t^i` with integer coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `1 + t^deg`.
    pub fn one_plus(deg: usize) -> Self {
        &Self::one() + &Self::monomial(1, deg)
    }

    /// Counts `#{k : degrees contain k}` as coefficients.
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut coeffs = Vec::new();
        for d in degrees {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|x| x.checked_add(c))
                .expect("polynomial evaluation overflow")
        })
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::new(coeffs)
    }

    /// `t^k p(t)`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// `t^deg p(1/t) = p(t)` where `deg` is the degree.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exact quotient by `divisor`, an error if the remainder is nonzero or the
    /// leading coefficient of `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::InexactDivision)?;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let q = c / lead;
            quot[i] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = checked(rem[i + j].checked_sub(checked(q.checked_mul(dc))));
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Human-readable form such as `1 + 2*t^3 + t^6`.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("polynomial coefficient overflow")
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(v: Vec<i64>) -> Self {
        Self::new(v)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| checked(self.coeff(i).checked_add(o.coeff(i))))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| checked(self.coeff(i).checked_sub(o.coeff(i))))
                .collect(),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = checked(coeffs[i + j].checked_add(checked(a.checked_mul(b))));
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{}", a)?,
                (_, 1) => {}
                _ => write!(f, "{}*", a)?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

/// Gaussian binomial `[n choose k]_t` by the `t`-Pascal rule.
pub fn gaussian_binomial(n: usize, k: usize) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    // row[j] = [i choose j]_t
    let mut row: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let left = if j >= 1 { row[j - 1].clone() } else { IntPolynomial::zero() };
            let right = if j < i { row[j].shift(j) } else { IntPolynomial::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Gaussian multinomial `[N; d_1, ..., d_m]_t`, the Poincaré polynomial of
/// `Fl_D(C^N)` in `t = q^{1/2}` and of `Fl_D(R^N)` with `GF(2)` coefficients.
/// Zero parts are allowed and ignored.
pub fn gaussian_multinomial(parts: &[usize]) -> IntPolynomial {
    let mut total = 0;
    let mut acc = IntPolynomial::one();
    for &d in parts {
        total += d;
        acc = &acc * &gaussian_binomial(total, d);
    }
    acc
}

/// `∏_{j=1}^{n} (1 - t^j)`.
fn t_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, j| {
        &acc * &(&IntPolynomial::one() - &IntPolynomial::monomial(1, j))
    })
}

/// The same multinomial as a quotient of `t`-factorials, by exact division.
pub fn gaussian_multinomial_by_division(parts: &[usize]) -> Result<IntPolynomial> {
    let n: usize = parts.iter().sum();
    let denom = parts
        .iter()
        .fold(IntPolynomial::one(), |acc, &d| &acc * &t_factorial(d));
    t_factorial(n).div_exact(&denom)
}

/// Poincaré polynomial of `H^*(Fl_D(R^N); GF(2))`.
pub fn mod2_poincare(dims: &DimVector) -> IntPolynomial {
    gaussian_multinomial(dims.parts())
}

/// Exponents `e_{q+1}, ..., e_n` of the exterior factor of the rational
/// cohomology: `e_i = 4i - 1`, except `e_n = N - 1` for even `N`.
pub fn exterior_degrees(dims: &DimVector) -> Vec<usize> {
    let n_total = dims.n();
    let n = n_total / 2;
    let q: usize = dims.parts().iter().map(|d| d / 2).sum();
    (q + 1..=n)
        .map(|i| {
            if n_total % 2 == 0 && i == n {
                n_total - 1
            } else {
                4 * i - 1
            }
        })
        .collect()
}

/// Poincaré polynomial of `H^*(Fl_D(R^N); Q)`:
/// `[n; ⌊d_1/2⌋, ..., ⌊d_m/2⌋]_{t^4} ∏ (1 + t^{e_i})`.
pub fn rational_poincare(dims: &DimVector) -> IntPolynomial {
    let half: Vec<usize> = dims.parts().iter().map(|d| d / 2).collect();
    exterior_degrees(dims)
        .into_iter()
        .fold(gaussian_multinomial(&half).substitute_power(4), |acc, e| {
            &acc * &IntPolynomial::one_plus(e)
        })
}

/// `P_Tor = t/(1+t) (P_2 - P_0)`, the Poincaré polynomial of the 2-torsion
/// when all torsion has order 2.
pub fn torsion_poincare(dims: &DimVector) -> Result<IntPolynomial> {
    let diff = &mod2_poincare(dims) - &rational_poincare(dims);
    Ok(diff.div_exact(&IntPolynomial::one_plus(1))?.shift(1))
}

/// `P_Tor` for `Fl_{2D}` from `[2N; 2D]_t` and `[N; D]_{t^4}` directly.
pub fn torsion_poincare_even(half: &DimVector) -> Result<IntPolynomial> {
    let p2 = gaussian_multinomial_by_division(half.double().parts())?;
    let p0 = gaussian_multinomial_by_division(half.parts())?.substitute_power(4);
    Ok((&p2 - &p0).div_exact(&IntPolynomial::one_plus(1))?.shift(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(s: &str) -> DimVector {
        s.parse().unwrap()
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, 0, 0, 2, 0, 0, 1]).to_string(), "1 + 2*t^3 + t^6");
        assert_eq!(IntPolynomial::new(vec![0, -1, 3]).to_string(), "-t + 3*t^2");
    }

    #[test]
    fn small_multinomials() {
        assert_eq!(gaussian_binomial(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(gaussian_multinomial(&[1, 1, 1]).coeffs(), &[1, 2, 2, 1]);
        assert_eq!(gaussian_multinomial(&[1, 1, 1]).eval(1), 6);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational_poincare(&dv("1,1,1,1")).to_string(), "1 + 2*t^3 + t^6");
        let p = rational_poincare(&dv("3,3,3"));
        assert_eq!(p, IntPolynomial::from_degrees([0, 4, 4, 8, 8, 12, 15, 19, 19, 23, 23, 27]));
        assert_eq!(rational_poincare(&dv("1,1,1,1,1")), IntPolynomial::from_degrees([0, 3, 7, 10]));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_poincare(&dv("2,2")).unwrap().to_string(), "t^2 + t^3");
        assert_eq!(torsion_poincare_even(&dv("1,1")).unwrap().to_string(), "t^2 + t^3");
    }

    #[test]
    fn exact_division_detects_remainder() {
        let p = IntPolynomial::new(vec![1, 0, 1]);
        assert!(p.div_exact(&IntPolynomial::one_plus(1)).is_err());
    }
}
