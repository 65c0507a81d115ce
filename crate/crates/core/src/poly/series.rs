use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{Grading, Laurent};
use crate::error::{Error, Result};

/// Multivariate power series in nonnegative exponents, truncated at total degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Laurent,
    order: u32,
}

impl TruncatedSeries {
    pub fn new(poly: Laurent, order: u32) -> Result<Self> {
        if poly.terms().any(|(e, _)| e.iter().any(|&x| x < 0)) {
            return Err(Error::Input("series exponents must be nonnegative".into()));
        }
        let g = Grading::full(poly.nvars());
        Ok(TruncatedSeries {
            poly: poly.truncate(g, order as i64),
            order,
        })
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        TruncatedSeries {
            poly: Laurent::one(nvars),
            order,
        }
    }

    pub fn poly(&self) -> &Laurent {
        &self.poly
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn grading(&self) -> Grading {
        Grading::full(self.poly.nvars())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::Input(format!(
                "truncation orders differ: {} vs {}",
                self.order, other.order
            )));
        }
        let p = self
            .poly
            .mul_truncated(&other.poly, self.grading(), self.order as i64)?;
        Ok(TruncatedSeries {
            poly: p,
            order: self.order,
        })
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::Input(format!(
                "truncation orders differ: {} vs {}",
                self.order, other.order
            )));
        }
        Ok(TruncatedSeries {
            poly: self.poly.add(&other.poly)?,
            order: self.order,
        })
    }

    /// `self^e` for a series with constant term 1; negative `e` allowed.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        if !self.poly.constant_term().is_one() {
            return Err(Error::NonUnit);
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = TruncatedSeries::one(self.poly.nvars(), self.order);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(result)
    }

    /// Inverse via the geometric series in `1 - self`, which is nilpotent at this order.
    pub fn inverse(&self) -> Result<Self> {
        if !self.poly.constant_term().is_one() {
            return Err(Error::NonUnit);
        }
        let n = self.poly.nvars();
        let g = TruncatedSeries {
            poly: Laurent::one(n).sub(&self.poly)?,
            order: self.order,
        };
        let mut acc = TruncatedSeries::one(n, self.order);
        let mut power = TruncatedSeries::one(n, self.order);
        for _ in 0..self.order {
            power = power.mul(&g)?;
            if power.poly.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.poly.coeff(e)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn constant(&self) -> BigInt {
        self.poly
            .terms()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus(e: &[i64], order: u32) -> TruncatedSeries {
        TruncatedSeries::new(
            Laurent::one(e.len()).add(&Laurent::var_power(e)).unwrap(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn geometric_inverse() {
        let f = one_plus(&[1], 3);
        let inv = f.pow_int(-1).unwrap();
        let expect = Laurent::from_terms(
            1,
            (0..=3).map(|j| (vec![j], BigInt::from(if j % 2 == 0 { 1 } else { -1 }))),
        );
        assert_eq!(inv.poly(), &expect);
    }

    #[test]
    fn inverse_law_multivariate() {
        let f = one_plus(&[1, 0], 6)
            .mul(&one_plus(&[1, 1], 6))
            .unwrap()
            .pow_int(2)
            .unwrap();
        for e in [-3, -1, 2, 5] {
            let p = f.pow_int(e).unwrap().mul(&f.pow_int(-e).unwrap()).unwrap();
            assert!(p.poly().is_one());
        }
    }

    #[test]
    fn non_unit_rejected() {
        let f = TruncatedSeries::new(Laurent::var_power(&[1]), 3).unwrap();
        assert_eq!(f.pow_int(-1), Err(Error::NonUnit));
    }
}
