//! Exact rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

/// `(a, b/c, ...)`
pub fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &[Q]) -> QVec {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Row-reduces `m` in place; returns the pivot columns.
pub fn rref(m: &mut [QVec]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[QVec]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : row·x = 0 for all rows}` in ambient dimension `dim`.
pub fn nullspace(rows: &[QVec], dim: usize) -> Vec<QVec> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); dim];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `a` with `Σ a_i gens[i] = x`, assuming `gens` independent.
pub fn solve_in_span(gens: &[QVec], x: &[Q]) -> Option<QVec> {
    let dim = x.len();
    let k = gens.len();
    // augmented matrix: rows = coordinates, columns = generators + rhs
    let mut m: Vec<QVec> = (0..dim)
        .map(|i| {
            let mut row: QVec = gens.iter().map(|g| g[i].clone()).collect();
            row.push(x[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![Q::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        sol[p] = m[r][k].clone();
    }
    Some(sol)
}

pub fn inverse(m: &[QVec]) -> Option<Vec<QVec>> {
    let n = m.len();
    let mut a: Vec<QVec> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[QVec], v: &[Q]) -> QVec {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &[QVec]) -> Vec<QVec> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Primitive integer vector on the ray through `v`.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[Q]) -> Vec<i64> {
    primitive(v)
        .iter()
        .map(|x| i64::try_from(x).expect("coordinate exceeds i64"))
        .collect()
}

pub fn to_i64(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(&[qvec(&[1, 0, -1])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&qvec(&[1, 0, -1]), v).is_zero());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let gens = vec![qvec(&[1, 1]), qvec(&[0, 2])];
        let sol = solve_in_span(&gens, &qvec(&[3, 5])).unwrap();
        assert_eq!(sol, vec![q(3), q(1)]);
        assert!(solve_in_span(&[qvec(&[1, 0, 0])], &qvec(&[0, 1, 0])).is_none());
        let inv = inverse(&gens).unwrap();
        assert_eq!(inv, vec![vec![q(1), qfrac(-1, 2)], vec![q(0), qfrac(1, 2)]]);
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive_i64(&[qfrac(2, 3), qfrac(-4, 3)]), vec![1, -2]);
    }
}
