use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;

/// A seed: lattice basis `e_i` with integer skew form `{e_i, e_j}`,
/// multipliers `d_i` and an optional set of frozen indices.
///
/// Indices are 0-based. Points of `M_R` are written in the basis
/// `f_i = e_i^* / d_i`, so the pairing is `<n, m> = Σ n_i m_i / d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub rank: usize,
    pub skew: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    #[serde(default)]
    pub frozen: Vec<usize>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl Seed {
    pub fn new(skew: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let rank = skew.len();
        let labels = (1..=rank).map(|i| i.to_string()).collect();
        let s = Seed {
            rank,
            skew,
            d,
            frozen: vec![],
            labels,
        };
        s.validate()?;
        Ok(s)
    }

    /// Seed with all multipliers 1.
    pub fn skew_symmetric(skew: Vec<Vec<i64>>) -> Result<Self> {
        let r = skew.len();
        Self::new(skew, vec![1; r])
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut s: Seed = serde_json::from_str(text)?;
        if s.labels.is_empty() {
            s.labels = (1..=s.rank).map(|i| i.to_string()).collect();
        }
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("seed serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.rank;
        if r == 0 {
            return Err(Error::Input("rank must be positive".into()));
        }
        if self.skew.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: self.skew.len(),
            });
        }
        if self.d.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: self.d.len(),
            });
        }
        if !self.labels.is_empty() && self.labels.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: self.labels.len(),
            });
        }
        for (i, row) in self.skew.iter().enumerate() {
            if row.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: row.len(),
                });
            }
            for j in 0..r {
                if row[j] != -self.skew[j][i] {
                    return Err(Error::Input(format!(
                        "skew form not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        if let Some(x) = self.d.iter().find(|&&x| x < 1) {
            return Err(Error::Input(format!("multiplier {x} < 1")));
        }
        if let Some(&k) = self.frozen.iter().find(|&&k| k >= r) {
            return Err(Error::IndexOutOfRange { index: k, rank: r });
        }
        Ok(())
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_frozen(&self, k: usize) -> bool {
        self.frozen.contains(&k)
    }

    pub fn unfrozen(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(|k| !self.is_frozen(*k))
    }

    /// Exchange matrix entry `ε_ij = {e_i, e_j} d_j`.
    pub fn exchange(&self, i: usize, j: usize) -> i64 {
        self.skew[i][j] * self.d[j]
    }

    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.exchange(i, j)).collect())
            .collect()
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `{a, b} = Σ a_i b_j {e_i, e_j}`.
    pub fn skew_pair(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.skew_pair_unchecked(a, b))
    }

    pub(crate) fn skew_pair_unchecked(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                s += ai * bj * self.skew[i][j];
            }
        }
        s
    }

    /// `{n, ·}` as an element of `M°`, in the `f` basis.
    pub fn p_star(&self, n: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| n[i] * self.exchange(i, j)).sum())
            .collect()
    }

    /// `<n, m>` for `n ∈ N` (basis `e`) and `m ∈ M_R` (basis `f`).
    pub fn pair(&self, n: &[i64], m: &[Q]) -> Q {
        let mut s = Q::from_integer(BigInt::from(0));
        for i in 0..self.rank {
            if n[i] != 0 {
                s += Q::new(BigInt::from(n[i]), BigInt::from(self.d[i])) * &m[i];
            }
        }
        s
    }

    /// `<n, m>` for integral `m`, as a reduced fraction `(num, den)`.
    pub fn pair_int(&self, n: &[i64], m: &[i64]) -> (i64, i64) {
        let l = self.d.iter().fold(1i64, |a, &b| num_integer::lcm(a, b));
        let num: i64 = (0..self.rank).map(|i| n[i] * m[i] * (l / self.d[i])).sum();
        let g = num_integer::gcd(num, l);
        if g == 0 {
            (0, 1)
        } else {
            (num / g, l / g)
        }
    }

    /// Normal vector of `n^⊥` in the `f` coordinates of `M_R`.
    pub fn normal(&self, n: &[i64]) -> Vec<Q> {
        (0..self.rank)
            .map(|i| Q::new(BigInt::from(n[i]), BigInt::from(self.d[i])))
            .collect()
    }

    /// Seed with the negated skew form.
    pub fn opposite(&self) -> Seed {
        let mut s = self.clone();
        for row in s.skew.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        s
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }
}
