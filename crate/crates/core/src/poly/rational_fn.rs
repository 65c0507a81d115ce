use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::gcd::{exact_div, gcd};
use super::laurent::Laurent;
use crate::error::{Error, Result};

/// Exact rational function `num / den` in reduced form.
///
/// Both parts are polynomials with nonnegative exponents, `gcd(num, den) = 1`
/// (including integer content) and the lexicographically leading coefficient
/// of `den` is positive. Equal functions therefore have equal representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalExpr {
    num: Laurent,
    den: Laurent,
}

impl RationalExpr {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Division("zero denominator".into()));
        }
        if num.nvars() != den.nvars() {
            return Err(Error::DimensionMismatch {
                expected: num.nvars(),
                got: den.nvars(),
            });
        }
        // clear negative exponents by a common monomial
        let n = num.nvars();
        let mut shift = vec![0i64; n];
        for p in [&num, &den] {
            for (e, _) in p.terms() {
                for (s, &x) in shift.iter_mut().zip(e) {
                    *s = (*s).max(-x);
                }
            }
        }
        let one = BigInt::one();
        let num = num.mul_monomial(&shift, &one);
        let den = den.mul_monomial(&shift, &one);
        if num.is_zero() {
            return Ok(RationalExpr {
                num,
                den: Laurent::one(n),
            });
        }
        let g = gcd(&num, &den)?;
        let mut num = exact_div(&num, &g)?;
        let mut den = exact_div(&den, &g)?;
        if den.terms().last().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalExpr { num, den })
    }

    pub fn from_laurent(p: Laurent) -> Self {
        let n = p.nvars();
        RationalExpr::new(p, Laurent::one(n)).expect("unit denominator")
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Self::from_laurent(Laurent::monomial(vec![0; n], BigInt::from(c)))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::from_laurent(Laurent::var_power(&e))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let n = self.num.mul(&o.den)?.add(&o.num.mul(&self.den)?)?;
        RationalExpr::new(n, self.den.mul(&o.den)?)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let n = self.num.mul(&o.den)?.sub(&o.num.mul(&self.den)?)?;
        RationalExpr::new(n, self.den.mul(&o.den)?)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        RationalExpr::new(self.num.mul(&o.num)?, self.den.mul(&o.den)?)
    }

    pub fn recip(&self) -> Result<Self> {
        RationalExpr::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.recip()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut r = RationalExpr::constant(self.nvars(), 1);
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base)?;
        }
        Ok(r)
    }

    /// Simultaneous substitution `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[RationalExpr]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let m = images.first().map(|r| r.nvars()).unwrap_or(0);
        let eval = |p: &Laurent| -> Result<RationalExpr> {
            let mut acc = RationalExpr::constant(m, 0);
            for (e, c) in p.terms() {
                let mut t = RationalExpr::from_laurent(Laurent::monomial(vec![0; m], c.clone()));
                for (i, &k) in e.iter().enumerate() {
                    if k != 0 {
                        t = t.mul(&images[i].pow(k)?)?;
                    }
                }
                acc = acc.add(&t)?;
            }
            Ok(acc)
        };
        eval(&self.num)?.div(&eval(&self.den)?)
    }

    /// True when the denominator is a single monomial, i.e. the function is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.len() == 1
    }

    pub fn to_laurent(&self) -> Option<Laurent> {
        let (e, c) = self.den.as_monomial()?;
        if !c.is_one() {
            return None;
        }
        let inv: Vec<i64> = e.iter().map(|x| -x).collect();
        Some(self.num.mul_monomial(&inv, &BigInt::one()))
    }
}

impl fmt::Debug for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_common_factor() {
        let x = RationalExpr::var(2, 0);
        let y = RationalExpr::var(2, 1);
        let s = x.add(&y).unwrap();
        let r = s.mul(&x).unwrap().div(&s.mul(&y).unwrap()).unwrap();
        assert_eq!(r, x.div(&y).unwrap());
    }

    #[test]
    fn canonical_sign() {
        let x = RationalExpr::var(1, 0);
        let m1 = RationalExpr::constant(1, -1);
        assert_eq!(m1.div(&x.mul(&m1).unwrap()).unwrap(), x.recip().unwrap());
    }

    #[test]
    fn substitution_composes() {
        let x = RationalExpr::var(1, 0);
        let f = x
            .add(&RationalExpr::constant(1, 1))
            .unwrap()
            .recip()
            .unwrap();
        let g = f.substitute(std::slice::from_ref(&f)).unwrap();
        // 1/(1 + 1/(x+1)) = (x+1)/(x+2)
        let expect = x
            .add(&RationalExpr::constant(1, 1))
            .unwrap()
            .div(&x.add(&RationalExpr::constant(1, 2)).unwrap())
            .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn laurent_detection() {
        let x = RationalExpr::var(2, 0);
        let y = RationalExpr::var(2, 1);
        let l = x.add(&y).unwrap().div(&x.mul(&y).unwrap()).unwrap();
        assert!(l.is_laurent());
        assert!(!x.div(&x.add(&y).unwrap()).unwrap().is_laurent());
    }
}
