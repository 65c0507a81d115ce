use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exp = Vec<i64>;

/// Exact multivariate Laurent polynomial with big-integer coefficients.
///
/// Zero coefficients are never stored and every exponent has length `nvars`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Exp, BigInt>,
}

/// Which coordinates count towards the truncation degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grading {
    pub start: usize,
    pub len: usize,
}

impl Grading {
    pub fn full(n: usize) -> Self {
        Grading { start: 0, len: n }
    }

    pub fn degree(&self, e: &[i64]) -> i64 {
        e[self.start..self.start + self.len].iter().sum()
    }
}

fn add_exp(a: &[i64], b: &[i64]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Exp, coef: BigInt) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Laurent { nvars, terms }
    }

    pub fn var_power(exp: &[i64]) -> Self {
        Self::monomial(exp.to_vec(), BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Laurent::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exp, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exp, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Laurent) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Laurent {
        if k.is_zero() {
            return Laurent::zero(self.nvars);
        }
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut r = Laurent::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                r.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        Ok(r)
    }

    /// Product keeping only terms of degree at most `max_deg` under `g`.
    pub fn mul_truncated(&self, other: &Laurent, g: Grading, max_deg: i64) -> Result<Laurent> {
        self.check(other)?;
        let mut r = Laurent::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da = g.degree(ea);
            for (eb, cb) in &other.terms {
                if da + g.degree(eb) <= max_deg {
                    r.add_term(add_exp(ea, eb), ca * cb);
                }
            }
        }
        Ok(r)
    }

    pub fn mul_monomial(&self, e: &[i64], c: &BigInt) -> Laurent {
        let mut r = Laurent::zero(self.nvars);
        for (ea, ca) in &self.terms {
            r.add_term(add_exp(ea, e), ca * c);
        }
        r
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut r = Laurent::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self).expect("same ring");
        }
        r
    }

    /// Drops terms of degree greater than `max_deg`.
    pub fn truncate(&self, g: Grading, max_deg: i64) -> Laurent {
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| g.degree(e) <= max_deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self, g: Grading) -> Option<i64> {
        self.terms.keys().map(|e| g.degree(e)).min()
    }

    pub fn max_degree(&self, g: Grading) -> Option<i64> {
        self.terms.keys().map(|e| g.degree(e)).max()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Terms in canonical order: graded by coordinate sum, then lexicographic.
    pub fn canonical_terms(&self) -> Vec<(&Exp, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.canonical_terms()
                .into_iter()
                .map(|(e, c)| serde_json::json!({"exp": e, "coef": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, v: &serde_json::Value) -> Result<Laurent> {
        let terms: Vec<JsonTerm> = serde_json::from_value(v.clone())?;
        let mut p = Laurent::zero(nvars);
        for t in terms {
            if t.exp.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: t.exp.len(),
                });
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Input(format!("bad coefficient {}", t.coef)))?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Exp,
    coef: String,
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.canonical_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*z^{e:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(e: &[i64]) -> Laurent {
        Laurent::var_power(e)
    }

    #[test]
    fn square_of_binomial() {
        let f = Laurent::one(1).add(&x(&[1])).unwrap();
        let sq = f.mul(&f).unwrap().truncate(Grading::full(1), 2);
        assert_eq!(sq.coeff(&[0]), BigInt::from(1));
        assert_eq!(sq.coeff(&[1]), BigInt::from(2));
        assert_eq!(sq.coeff(&[2]), BigInt::from(1));
    }

    #[test]
    fn difference_of_squares() {
        let a = Laurent::one(1).add(&x(&[1])).unwrap();
        let b = Laurent::one(1).sub(&x(&[1])).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, Laurent::one(1).sub(&x(&[2])).unwrap());
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let p = Laurent::from_terms(
            2,
            vec![
                (vec![2, 0], BigInt::from(3)),
                (vec![0, 1], BigInt::from(-1)),
                (vec![-1, 0], BigInt::from(5)),
            ],
        );
        let j = p.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"[{"coef":"5","exp":[-1,0]},{"coef":"-1","exp":[0,1]},{"coef":"3","exp":[2,0]}]"#
        );
        assert_eq!(Laurent::from_json(2, &j).unwrap(), p);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = x(&[1, 1]).sub(&x(&[1, 1])).unwrap();
        assert!(p.is_zero());
    }
}
