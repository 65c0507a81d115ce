//! Greatest common divisors and exact division in `Z[x_1, ..., x_n]`.
//!
//! Polynomials are [`Laurent`] values whose exponents are all nonnegative.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{Exp, Laurent};
use crate::error::{Error, Result};

fn leading_lex(p: &Laurent) -> Option<(&Exp, &BigInt)> {
    p.terms().last()
}

pub fn is_polynomial(p: &Laurent) -> bool {
    p.terms().all(|(e, _)| e.iter().all(|&x| x >= 0))
}

/// Exact quotient `a / b`; fails if `b` does not divide `a`.
pub fn exact_div(a: &Laurent, b: &Laurent) -> Result<Laurent> {
    let (lb_e, lb_c) = leading_lex(b).ok_or_else(|| Error::Division("division by zero".into()))?;
    let (lb_e, lb_c) = (lb_e.clone(), lb_c.clone());
    let n = a.nvars();
    let mut rem = a.clone();
    let mut quot = Laurent::zero(n);
    while let Some((le, lc)) = leading_lex(&rem) {
        let e: Exp = le.iter().zip(&lb_e).map(|(x, y)| x - y).collect();
        if e.iter().any(|&x| x < 0) {
            return Err(Error::Division("polynomial does not divide".into()));
        }
        let (qc, r) = lc.div_rem(&lb_c);
        if !r.is_zero() {
            return Err(Error::Division("coefficient does not divide".into()));
        }
        rem = rem.sub(&b.mul_monomial(&e, &qc))?;
        quot.add_term(e, qc);
    }
    Ok(quot)
}

fn degree_in(p: &Laurent, v: usize) -> i64 {
    p.terms().map(|(e, _)| e[v]).max().unwrap_or(0)
}

/// Coefficients of `p` as a polynomial in `x_v`.
fn coefficients_in(p: &Laurent, v: usize) -> BTreeMap<i64, Laurent> {
    let mut out: BTreeMap<i64, Laurent> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        let d = e2[v];
        e2[v] = 0;
        out.entry(d)
            .or_insert_with(|| Laurent::zero(p.nvars()))
            .add_term(e2, c.clone());
    }
    out
}

fn content_in(p: &Laurent, v: usize) -> Result<Laurent> {
    let mut g = Laurent::zero(p.nvars());
    for c in coefficients_in(p, v).values() {
        g = gcd(&g, c)?;
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

fn primitive_part_in(p: &Laurent, v: usize) -> Result<Laurent> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    let c = content_in(p, v)?;
    exact_div(p, &c)
}

fn pseudo_remainder(a: &Laurent, b: &Laurent, v: usize) -> Result<Laurent> {
    let db = degree_in(b, v);
    let cb = coefficients_in(b, v);
    let lc_b = cb[&db].clone();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return Ok(r);
        }
        let dr = degree_in(&r, v);
        if dr < db {
            return Ok(r);
        }
        let lc_r = coefficients_in(&r, v)[&dr].clone();
        let mut shift = vec![0; a.nvars()];
        shift[v] = dr - db;
        let t = b.mul(&lc_r)?.mul_monomial(&shift, &BigInt::one());
        r = r.mul(&lc_b)?.sub(&t)?;
    }
}

/// Makes the lexicographically leading coefficient positive.
pub fn normalize_sign(p: &Laurent) -> Laurent {
    match leading_lex(p) {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &Laurent, b: &Laurent) -> Result<Laurent> {
    if !is_polynomial(a) || !is_polynomial(b) {
        return Err(Error::Input("gcd requires polynomials".into()));
    }
    if a.is_zero() {
        return Ok(normalize_sign(b));
    }
    if b.is_zero() {
        return Ok(normalize_sign(a));
    }
    let n = a.nvars();
    let var = (0..n).find(|&v| degree_in(a, v) > 0 || degree_in(b, v) > 0);
    let Some(v) = var else {
        let g = a.constant_term().gcd(&b.constant_term());
        return Ok(Laurent::monomial(vec![0; n], g));
    };
    let ca = content_in(a, v)?;
    let cb = content_in(b, v)?;
    let gc = gcd(&ca, &cb)?;
    let mut pa = exact_div(a, &ca)?;
    let mut pb = exact_div(b, &cb)?;
    if degree_in(&pa, v) < degree_in(&pb, v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if degree_in(&pb, v) == 0 {
            break Laurent::one(n);
        }
        let r = pseudo_remainder(&pa, &pb, v)?;
        if r.is_zero() {
            break primitive_part_in(&pb, v)?;
        }
        pa = pb;
        pb = primitive_part_in(&r, v)?;
    };
    Ok(normalize_sign(&g.mul(&gc)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[i64], i64)]) -> Laurent {
        let n = terms[0].0.len();
        Laurent::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_products() {
        // (x + y)(x - 2) and (x + y)(y + 3)
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let a = f.mul(&p(&[(&[1, 0], 1), (&[0, 0], -2)])).unwrap();
        let b = f.mul(&p(&[(&[0, 1], 1), (&[0, 0], 3)])).unwrap();
        assert_eq!(gcd(&a, &b).unwrap(), f);
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = p(&[(&[2], 4), (&[0], 4)]);
        let b = p(&[(&[2], 6), (&[0], 6)]);
        assert_eq!(gcd(&a, &b).unwrap(), p(&[(&[2], 2), (&[0], 2)]));
    }

    #[test]
    fn coprime() {
        let a = p(&[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)]);
        let b = p(&[(&[1, 1, 1], 1)]);
        assert!(gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn exact_division() {
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = f.mul(&f).unwrap();
        assert_eq!(exact_div(&g, &f).unwrap(), f);
        assert!(exact_div(&f, &g).is_err());
    }
}
