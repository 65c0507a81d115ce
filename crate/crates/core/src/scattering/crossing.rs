use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::Seed;
use crate::poly::{Grading, Laurent, Series1};

/// Ring on which wall-crossing automorphisms act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// `Z[N]`, monomials `x^n` with `n` in the `e` basis.
    X,
    /// `Z[M° ⊕ N]`, monomials `z^{(m,n)}` with `m` in the `f` basis and `n` in the `e` basis.
    Prin,
}

impl Ring {
    pub fn nvars(self, rank: usize) -> usize {
        match self {
            Ring::X => rank,
            Ring::Prin => 2 * rank,
        }
    }

    /// Grading by the `N` part.
    pub fn grading(self, rank: usize) -> Grading {
        match self {
            Ring::X => Grading {
                start: 0,
                len: rank,
            },
            Ring::Prin => Grading {
                start: rank,
                len: rank,
            },
        }
    }

    /// Exponent of `z^{n}` for `n ∈ N`: `n` itself, or `({n,·}, n)`.
    pub fn lift(self, seed: &Seed, n: &[i64]) -> Vec<i64> {
        match self {
            Ring::X => n.to_vec(),
            Ring::Prin => {
                let mut e = seed.p_star(n);
                e.extend_from_slice(n);
                e
            }
        }
    }

    /// Exponent of `z^{(m, n)}`.
    pub fn prin_exp(m: &[i64], n: &[i64]) -> Vec<i64> {
        let mut e = m.to_vec();
        e.extend_from_slice(n);
        e
    }
}

/// A single wall-crossing automorphism: `(normal, func, sign)` acting on a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCrossing {
    pub normal: Vec<i64>,
    pub func: Series1,
    pub sign: i64,
}

impl WallCrossing {
    pub fn new(normal: Vec<i64>, func: Series1, sign: i64) -> Self {
        WallCrossing { normal, func, sign }
    }

    pub fn inverse(&self) -> Self {
        WallCrossing {
            sign: -self.sign,
            ..self.clone()
        }
    }

    /// Exponent of the wall function for a monomial with exponent `e`, as `(num, den)`.
    fn power(&self, seed: &Seed, ring: Ring, e: &[i64]) -> (i64, i64) {
        let r = seed.rank;
        let (num, den) = match ring {
            Ring::X => (seed.skew_pair_unchecked(&e[..r], &self.normal), 1),
            Ring::Prin => seed.pair_int(&self.normal, &e[..r]),
        };
        (self.sign * num, den)
    }

    /// Applies the automorphism to `f`, discarding terms of degree above `max_deg`.
    pub fn apply(&self, seed: &Seed, ring: Ring, f: &Laurent, max_deg: i64) -> Result<Laurent> {
        let r = seed.rank;
        if f.nvars() != ring.nvars(r) {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(r),
                got: f.nvars(),
            });
        }
        if !self.func.has_unit_constant() {
            return Err(Error::NonUnit);
        }
        let g = ring.grading(r);
        let t_exp = ring.lift(seed, &self.normal);
        let step = self.normal.iter().sum::<i64>();
        let mut cache: HashMap<(i64, i64, usize), Series1> = HashMap::new();
        let mut out = Laurent::zero(f.nvars());
        for (e, c) in f.terms() {
            let deg = g.degree(e);
            if deg > max_deg {
                continue;
            }
            let (num, den) = self.power(seed, ring, e);
            if num == 0 {
                out.add_term(e.clone(), c.clone());
                continue;
            }
            let jmax = ((max_deg - deg) / step) as usize;
            let key = (num, den, jmax);
            if !cache.contains_key(&key) {
                cache.insert(key, self.func.pow_rational(num, den, jmax)?);
            }
            let s = &cache[&key];
            for (j, a) in s.coeffs().iter().enumerate() {
                if a == &BigInt::from(0) {
                    continue;
                }
                let exp: Vec<i64> = e
                    .iter()
                    .zip(&t_exp)
                    .map(|(x, t)| x + t * j as i64)
                    .collect();
                out.add_term(exp, a * c);
            }
        }
        Ok(out)
    }
}

/// Applies crossings in order (the first one is applied first).
pub fn apply_sequence(
    seed: &Seed,
    ring: Ring,
    seq: &[WallCrossing],
    f: &Laurent,
    max_deg: i64,
) -> Result<Laurent> {
    let mut g = f.truncate(ring.grading(seed.rank), max_deg);
    for c in seq {
        g = c.apply(seed, ring, &g, max_deg)?;
    }
    Ok(g)
}

/// Applies crossings to `f` at increasing orders until two consecutive
/// orders agree and the result lies below the first of them.
pub fn apply_stable(
    seed: &Seed,
    seq: &[WallCrossing],
    f: &Laurent,
    start: u32,
    step: u32,
    max_order: u32,
) -> Result<Laurent> {
    let g = Ring::Prin.grading(seed.rank);
    let base = f.min_degree(g).unwrap_or(0);
    let mut k = start.max(1);
    let mut prev = apply_sequence(seed, Ring::Prin, seq, f, base + k as i64)?;
    while k + step <= max_order {
        let next = apply_sequence(seed, Ring::Prin, seq, f, base + (k + step) as i64)?;
        if next == prev && prev.max_degree(g).unwrap_or(base) < base + k as i64 {
            return Ok(prev);
        }
        k += step;
        prev = next;
    }
    Err(Error::Unstable { order: k })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn markov() -> Seed {
        Seed::new(
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
            vec![2, 2, 2],
        )
        .unwrap()
    }

    #[test]
    fn prin_crossing_out_of_positive_chamber() {
        let s = a2();
        let w = WallCrossing::new(vec![1, 0], Series1::binomial(1), 1);
        let z = Laurent::var_power(&[1, 0, 0, 0]);
        let got = w.apply(&s, Ring::Prin, &z, 10).unwrap();
        let x1 = Ring::Prin.lift(&s, &[1, 0]);
        let expect = z
            .mul(&Laurent::one(4).add(&Laurent::var_power(&x1)).unwrap())
            .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn markov_x_crossing() {
        let s = markov();
        let w = WallCrossing::new(vec![1, 0, 0], Series1::binomial(2), 1);
        let got = w
            .apply(&s, Ring::X, &Laurent::var_power(&[0, 1, 0]), 4)
            .unwrap();
        // x2 (1 + x1)^{-2}
        let expect = Laurent::from_terms(
            3,
            [(1, 1), (2, -2), (3, 3), (4, -4)]
                .iter()
                .map(|&(j, c)| (vec![j - 1, 1, 0], BigInt::from(c))),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn wall_monomial_is_fixed() {
        let s = markov();
        let w = WallCrossing::new(vec![1, 1, 0], Series1::from_i64(&[1, 3, 1]), -1);
        let x = Laurent::var_power(&[1, 1, 0]);
        assert_eq!(w.apply(&s, Ring::X, &x, 8).unwrap(), x);
    }

    #[test]
    fn crossing_and_recrossing_cancel() {
        let s = markov();
        let w = WallCrossing::new(vec![1, 0, 0], Series1::binomial(2), 1);
        let f = Laurent::var_power(&[1, 0, 0, 0, 0, 0])
            .add(&Laurent::var_power(&[0, -1, 2, 0, 1, 0]))
            .unwrap();
        let g = apply_sequence(&s, Ring::Prin, &[w.clone(), w.inverse()], &f, 8).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn rational_powers_are_integral() {
        // ⟨e_1, f_1⟩ = 1/2 for the Markov seed; (1+t)^2 to that power is 1+t.
        let s = markov();
        let w = WallCrossing::new(vec![1, 0, 0], Series1::binomial(2), 1);
        let z = Laurent::var_power(&[1, 0, 0, 0, 0, 0]);
        let got = w.apply(&s, Ring::Prin, &z, 8).unwrap();
        assert_eq!(got.len(), 2);
    }
}
