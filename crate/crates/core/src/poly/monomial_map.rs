use super::laurent::{Exp, Laurent};
use crate::error::{Error, Result};

/// Integer linear map on exponent lattices, acting on polynomials monomial by monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    /// `rows[i][j]`: coefficient of input coordinate `j` in output coordinate `i`.
    rows: Vec<Vec<i64>>,
    in_dim: usize,
}

impl MonomialMap {
    pub fn new(rows: Vec<Vec<i64>>, in_dim: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != in_dim) {
            return Err(Error::DimensionMismatch {
                expected: in_dim,
                got: r.len(),
            });
        }
        Ok(MonomialMap { rows, in_dim })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        MonomialMap { rows, in_dim: n }
    }

    /// `e ↦ -e`.
    pub fn inversion(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect())
            .collect();
        MonomialMap { rows, in_dim: n }
    }

    /// Block-diagonal map `(a, b) ↦ (A a, B b)`.
    pub fn block_diag(a: &MonomialMap, b: &MonomialMap) -> Self {
        let in_dim = a.in_dim + b.in_dim;
        let mut rows = Vec::new();
        for r in &a.rows {
            let mut row = r.clone();
            row.extend(std::iter::repeat_n(0, b.in_dim));
            rows.push(row);
        }
        for r in &b.rows {
            let mut row = vec![0; a.in_dim];
            row.extend(r.iter().copied());
            rows.push(row);
        }
        MonomialMap { rows, in_dim }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn apply_exp(&self, e: &[i64]) -> Exp {
        self.rows
            .iter()
            .map(|r| r.iter().zip(e).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply(&self, f: &Laurent) -> Result<Laurent> {
        if f.nvars() != self.in_dim {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim,
                got: f.nvars(),
            });
        }
        Ok(Laurent::from_terms(
            self.out_dim(),
            f.terms().map(|(e, c)| (self.apply_exp(e), c.clone())),
        ))
    }

    pub fn compose(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        if inner.out_dim() != self.in_dim {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim,
                got: inner.out_dim(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..inner.in_dim)
                    .map(|j| {
                        r.iter()
                            .enumerate()
                            .map(|(k, a)| a * inner.rows[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(MonomialMap {
            rows,
            in_dim: inner.in_dim,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn identity_leaves_polynomial() {
        let f = Laurent::from_terms(
            2,
            vec![
                (vec![1, -2], BigInt::from(3)),
                (vec![0, 0], BigInt::from(1)),
            ],
        );
        assert_eq!(MonomialMap::identity(2).apply(&f).unwrap(), f);
    }

    #[test]
    fn inversion_negates_exponents() {
        let f = Laurent::var_power(&[1, 2, -3, 4]);
        assert_eq!(
            MonomialMap::inversion(4).apply(&f).unwrap(),
            Laurent::var_power(&[-1, -2, 3, -4])
        );
    }

    #[test]
    fn merging_coefficients() {
        let m = MonomialMap::new(vec![vec![1, 1]], 2).unwrap();
        let f = Laurent::from_terms(
            2,
            vec![(vec![1, 0], BigInt::from(1)), (vec![0, 1], BigInt::from(1))],
        );
        assert_eq!(
            m.apply(&f).unwrap(),
            Laurent::monomial(vec![1], BigInt::from(2))
        );
    }
}
