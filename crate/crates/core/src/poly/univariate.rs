use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::Laurent;
use crate::error::{Error, Result};

/// Truncated power series `Σ c_j t^j` in one formal variable.
///
/// Wall functions are of this form with `t = z^{n0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series1 {
    coeffs: Vec<BigInt>,
}

impl Series1 {
    pub fn one() -> Self {
        Series1 {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Series1 { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 + t)^d` for `d ≥ 0`.
    pub fn binomial(d: u32) -> Self {
        let mut c = vec![BigInt::one()];
        for _ in 0..d {
            let mut next = vec![BigInt::zero(); c.len() + 1];
            for (i, x) in c.iter().enumerate() {
                next[i] += x;
                next[i + 1] += x;
            }
            c = next;
        }
        Series1 { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn truncate(&self, max: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max + 1).cloned().collect())
    }

    /// `f(t^ell)`, truncated at `t^max`.
    pub fn dilate(&self, ell: usize, max: usize) -> Self {
        let mut c = vec![BigInt::zero(); max + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if j * ell <= max {
                c[j * ell] = a.clone();
            }
        }
        Self::from_coeffs(c)
    }

    pub fn mul(&self, other: &Series1, max: usize) -> Self {
        let n = (self.coeffs.len() + other.coeffs.len() - 1).min(max + 1);
        let mut c = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < n {
                    c[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(c)
    }

    /// `self^(num/den)` up to `t^max`, for a series with constant term 1.
    ///
    /// Coefficients are computed over the rationals and must come out integral.
    pub fn pow_rational(&self, num: i64, den: i64, max: usize) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::NonUnit);
        }
        if den <= 0 {
            return Err(Error::Input("exponent denominator must be positive".into()));
        }
        if num == 0 {
            return Ok(Series1::one());
        }
        if den == 1 && num > 0 && (num as usize) * self.degree() <= 64 {
            let mut r = Series1::one();
            for _ in 0..num {
                r = r.mul(self, max);
            }
            return Ok(r);
        }
        let alpha = BigRational::new(BigInt::from(num), BigInt::from(den));
        let a: Vec<BigRational> = (0..=max)
            .map(|j| BigRational::from_integer(self.coeff(j)))
            .collect();
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..=max {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                if a[i].is_zero() {
                    continue;
                }
                let w = &alpha * BigRational::from_integer(BigInt::from(i as i64))
                    - BigRational::from_integer(BigInt::from((n - i) as i64));
                acc += w * &a[i] * &b[n - i];
            }
            b.push(acc / BigRational::from_integer(BigInt::from(n as i64)));
        }
        let mut out = Vec::with_capacity(b.len());
        for (j, x) in b.into_iter().enumerate() {
            if !x.is_integer() {
                return Err(Error::Division(format!(
                    "coefficient {j} of power {num}/{den} is {x}"
                )));
            }
            out.push(x.to_integer());
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn pow_int(&self, e: i64, max: usize) -> Result<Self> {
        self.pow_rational(e, 1, max)
    }

    /// Substitutes `t = z^{var}` into a Laurent polynomial with `var.len()` variables.
    pub fn embed(&self, var: &[i64]) -> Laurent {
        Laurent::from_terms(
            var.len(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (var.iter().map(|v| v * j as i64).collect(), c.clone())),
        )
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}
