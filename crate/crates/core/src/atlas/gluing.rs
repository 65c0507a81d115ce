//! Rational functions in the folded Markov `A`-variables `A_1, A_2, A_3`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::Seed;
use crate::poly::{Laurent, RationalExpr};

/// Images of `A_1, A_2, A_3` under a birational map.
pub type ASubstitution = Vec<RationalExpr>;

pub fn a_var(i: usize) -> RationalExpr {
    RationalExpr::var(3, i)
}

/// `A^a`.
pub fn a_monomial(a: &[i64]) -> RationalExpr {
    RationalExpr::from_laurent(Laurent::var_power(a))
}

/// `η = (A_1² + A_2² + A_3²) / (A_1 A_2 A_3)`.
pub fn eta() -> RationalExpr {
    let num = Laurent::from_terms(
        3,
        [
            (vec![2, 0, 0], BigInt::from(1)),
            (vec![0, 2, 0], BigInt::from(1)),
            (vec![0, 0, 2], BigInt::from(1)),
        ],
    );
    RationalExpr::new(num, Laurent::var_power(&[1, 1, 1])).expect("nonzero denominator")
}

/// `μ_k^*`: `A_k ↦ (A_{k+1}² + A_{k+2}²) / A_k`, other variables fixed.
pub fn mutate_a(k: usize) -> Result<ASubstitution> {
    if k >= 3 {
        return Err(Error::IndexOutOfRange { index: k, rank: 3 });
    }
    let mut out: ASubstitution = (0..3).map(a_var).collect();
    let (b, c) = ((k + 1) % 3, (k + 2) % 3);
    out[k] = a_var(b).pow(2)?.add(&a_var(c).pow(2)?)?.div(&a_var(k))?;
    Ok(out)
}

/// `α^*`: `A_i ↦ A_i η²`.
pub fn alpha() -> Result<ASubstitution> {
    let e2 = eta().pow(2)?;
    (0..3).map(|i| a_var(i).mul(&e2)).collect()
}

/// `(α^{-1})^*`. Since `α^* η = η^{-1}`, `α` is an involution and this is `A_i ↦ A_i η²` again.
pub fn alpha_inverse() -> Result<ASubstitution> {
    alpha()
}

pub fn pull(f: &RationalExpr, s: &ASubstitution) -> Result<RationalExpr> {
    f.substitute(s)
}

/// `first` then `second`.
pub fn compose_a(first: &ASubstitution, second: &ASubstitution) -> Result<ASubstitution> {
    first.iter().map(|f| f.substitute(second)).collect()
}

/// `A^a η^b`.
pub fn eta_monomial(a: &[i64], b: i64) -> Result<RationalExpr> {
    a_monomial(a).mul(&eta().pow(b)?)
}

/// Membership of `A^a η^b` (with `a ≥ 0`) in the ring of functions regular on
/// both glued copies: `2(a_1 + a_2 + a_3) ≥ b ≥ 0`.
pub fn up_membership(a: &[i64], b: i64) -> Result<bool> {
    if a.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: a.len(),
        });
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::Input(format!("exponent {a:?} has a negative entry")));
    }
    Ok(b >= 0 && 2 * a.iter().sum::<i64>() >= b)
}

/// Laurent in the initial chart of each copy: `f` itself and `(α^{-1})^* f`.
pub fn regular_on_both_charts(f: &RationalExpr) -> Result<bool> {
    Ok(f.is_laurent() && pull(f, &alpha_inverse()?)?.is_laurent())
}

/// `s(A^a η^b)`, assembled from the images of `A_i` and `η`.
pub fn pull_eta_monomial(a: &[i64], b: i64, s: &ASubstitution) -> Result<RationalExpr> {
    let mut out = pull(&eta(), s)?.pow(b)?;
    for (i, &k) in a.iter().enumerate() {
        out = out.mul(&s[i].pow(k)?)?;
    }
    Ok(out)
}

/// [`regular_on_both_charts`] for `A^a η^b`.
pub fn eta_monomial_regular_on_both_charts(a: &[i64], b: i64) -> Result<bool> {
    let id: ASubstitution = (0..3).map(a_var).collect();
    Ok(pull_eta_monomial(a, b, &id)?.is_laurent()
        && pull_eta_monomial(a, b, &alpha_inverse()?)?.is_laurent())
}

/// Laurent in every chart reached by at most `depth` mutations.
pub fn laurent_in_charts(f: &RationalExpr, depth: usize) -> Result<bool> {
    let mut frontier = vec![(f.clone(), None::<usize>)];
    for _ in 0..=depth {
        let mut next = Vec::new();
        for (g, last) in &frontier {
            if !g.is_laurent() {
                return Ok(false);
            }
            for k in (0..3).filter(|k| Some(*k) != *last) {
                next.push((pull(g, &mutate_a(k)?)?, Some(k)));
            }
        }
        frontier = next;
    }
    Ok(true)
}

/// Restriction of a principal-ring function to `A`: `z^{(m, n)} ↦ A^m`.
pub fn to_a_side(seed: &Seed, f: &Laurent) -> Result<RationalExpr> {
    let r = seed.rank;
    if f.nvars() != 2 * r {
        return Err(Error::DimensionMismatch {
            expected: 2 * r,
            got: f.nvars(),
        });
    }
    let mut out = Laurent::zero(r);
    for (e, c) in f.terms() {
        out.add_term(e[..r].to_vec(), c.clone());
    }
    Ok(RationalExpr::from_laurent(out))
}
