use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::{Cone, Seed};
use crate::linalg::{self, qvec, QVec};
use crate::poly::{Laurent, Series1};

/// A wall: a codimension-one cone in `n0^⊥ ⊂ M_R` with function `f(z^{n0})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wall {
    /// Primitive normal in `N^+`, basis `e`.
    pub normal: Vec<i64>,
    /// Support cone, `f` coordinates.
    pub support: Cone,
    /// Wall function as a series in `t = z^{normal}`.
    pub func: Series1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallKind {
    Incoming,
    Outgoing,
}

/// Degree `d(n) = Σ n_i` of an element of `N^+`.
pub fn n_degree(n: &[i64]) -> i64 {
    n.iter().sum()
}

/// Splits `n ∈ N^+ \ {0}` into its primitive direction and multiplicity.
pub fn primitive_part(n: &[i64]) -> (Vec<i64>, i64) {
    let g = n.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
    (n.iter().map(|x| x / g).collect(), g)
}

impl Wall {
    pub fn new(seed: &Seed, normal: Vec<i64>, support: Cone, func: Series1) -> Result<Wall> {
        let w = Wall {
            normal,
            support,
            func,
        };
        w.validate(seed)?;
        Ok(w)
    }

    /// The full hyperplane `n^⊥` with the given function.
    pub fn hyperplane(seed: &Seed, normal: Vec<i64>, func: Series1) -> Result<Wall> {
        let support = Cone::hyperplane(&seed.normal(&normal));
        Wall::new(seed, normal, support, func)
    }

    pub fn validate(&self, seed: &Seed) -> Result<()> {
        let r = seed.rank;
        if self.normal.len() != r || self.support.ambient_dim() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: self.normal.len(),
            });
        }
        if self.normal.iter().any(|&x| x < 0) || self.normal.iter().all(|&x| x == 0) {
            return Err(Error::Input(format!(
                "wall normal {:?} not in N^+",
                self.normal
            )));
        }
        if primitive_part(&self.normal).1 != 1 {
            return Err(Error::Input(format!(
                "wall normal {:?} not primitive",
                self.normal
            )));
        }
        let nv = seed.normal(&self.normal);
        if self
            .support
            .generators()
            .iter()
            .any(|g| linalg::sign(&linalg::dot(&nv, g)) != 0)
        {
            return Err(Error::Input(
                "wall support not contained in normal hyperplane".into(),
            ));
        }
        if self.support.dimension() + 1 != r {
            return Err(Error::Input(format!(
                "wall support has dimension {}",
                self.support.dimension()
            )));
        }
        if !self.func.has_unit_constant() {
            return Err(Error::NonUnit);
        }
        Ok(())
    }

    /// Degree of `t = z^{normal}`.
    pub fn step(&self) -> i64 {
        n_degree(&self.normal)
    }

    pub fn is_trivial(&self) -> bool {
        self.func.is_one()
    }

    /// Function truncated to total degree `k`.
    pub fn truncated(&self, k: i64) -> Wall {
        let max = if k < 0 { 0 } else { (k / self.step()) as usize };
        Wall {
            func: self.func.truncate(max),
            ..self.clone()
        }
    }

    /// Incoming iff `{normal, ·}` lies in the support.
    pub fn classify(&self, seed: &Seed) -> WallKind {
        if self.support.contains(&qvec(&seed.p_star(&self.normal))) {
            WallKind::Incoming
        } else {
            WallKind::Outgoing
        }
    }

    /// Wall function as a Laurent polynomial in the variables of `N`.
    pub fn func_poly(&self) -> Laurent {
        self.func.embed(&self.normal)
    }

    /// Relabels indices by the permutation `i ↦ perm[i]` on `N` and `M`.
    pub fn permuted(&self, perm: &[usize]) -> Wall {
        let apply_q = |v: &QVec| -> QVec {
            let mut out = v.clone();
            for (i, x) in v.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        };
        let mut normal = self.normal.clone();
        for (i, &x) in self.normal.iter().enumerate() {
            normal[perm[i]] = x;
        }
        let support = Cone::with_dim(
            self.support.ambient_dim(),
            self.support.rays().iter().map(apply_q).collect(),
            self.support.lines().iter().map(apply_q).collect(),
        );
        Wall {
            normal,
            support,
            func: self.func.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vecs = |v: &[QVec]| -> serde_json::Value {
            serde_json::Value::Array(
                v.iter()
                    .map(|r| {
                        serde_json::Value::Array(r.iter().map(|x| json!(x.to_string())).collect())
                    })
                    .collect(),
            )
        };
        json!({
            "n0": self.normal,
            "rays": vecs(self.support.rays()),
            "lineality": vecs(self.support.lines()),
            "func": self.func_poly().to_json(),
        })
    }

    pub fn from_json(seed: &Seed, v: &serde_json::Value) -> Result<Wall> {
        let normal: Vec<i64> = serde_json::from_value(v["n0"].clone())?;
        let parse_vecs = |key: &str| -> Result<Vec<QVec>> {
            let raw: Vec<Vec<String>> = match v.get(key) {
                Some(x) => serde_json::from_value(x.clone())?,
                None => vec![],
            };
            raw.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| {
                            s.parse::<linalg::Q>()
                                .map_err(|e| Error::Json(format!("bad rational {s}: {e}")))
                        })
                        .collect()
                })
                .collect()
        };
        let support = Cone::with_dim(seed.rank, parse_vecs("rays")?, parse_vecs("lineality")?);
        let poly = Laurent::from_json(seed.rank, &v["func"])?;
        let mut coeffs = Vec::new();
        for (e, c) in poly.terms() {
            let (dir, j) = if e.iter().all(|&x| x == 0) {
                (normal.clone(), 0)
            } else {
                primitive_part(e)
            };
            if dir != normal {
                return Err(Error::Input(format!(
                    "function exponent {e:?} not a multiple of {normal:?}"
                )));
            }
            let j = j as usize;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, num_bigint::BigInt::from(0));
            }
            coeffs[j] = c.clone();
        }
        Wall::new(seed, normal, support, Series1::from_coeffs(coeffs))
    }
}
