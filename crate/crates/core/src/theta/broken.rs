use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{self, QVec, Q};
use crate::poly::Laurent;
use crate::scattering::{Diagram, Ring};

/// One domain of linearity of a broken line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub coeff: BigInt,
    /// Exponent `(m, n)` of the monomial carried on this segment.
    pub exponent: Vec<i64>,
    /// Start point; `None` for the unbounded initial segment.
    pub start: Option<QVec>,
    pub end: QVec,
}

/// A bend: the wall normal at the bend point and the chosen power of `z^{normal}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bend {
    pub point: QVec,
    pub normal: Vec<i64>,
    pub power: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenLine {
    pub segments: Vec<Segment>,
    pub bends: Vec<Bend>,
    pub endpoint: QVec,
}

impl BrokenLine {
    pub fn final_monomial(&self) -> (&BigInt, &[i64]) {
        let s = self.segments.last().expect("a broken line has a segment");
        (&s.coeff, &s.exponent)
    }
}

/// Sum of final monomials over all broken lines, with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaExpansion {
    pub p0: Vec<i64>,
    pub endpoint: QVec,
    pub order: u32,
    pub lines: usize,
    pub poly: Laurent,
}

impl ThetaExpansion {
    pub fn is_positive(&self) -> bool {
        self.poly.all_coefficients_positive()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p0": self.p0,
            "Q": self.endpoint.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "order": self.order,
            "lines": self.lines,
            "poly": self.poly.to_json(),
        })
    }
}

struct Hit {
    point: QVec,
    normal: Vec<i64>,
    func: crate::poly::Series1,
}

/// First wall met by the ray `p + s m`, `s > 0`, with `<n0, m> ≠ 0`.
fn first_hit(d: &Diagram, p: &[Q], m: &[Q]) -> Result<Option<Hit>> {
    let mut best: Option<Q> = None;
    for w in d.nontrivial_walls() {
        let pm = d.seed.pair(&w.normal, m);
        if pm.is_zero() {
            continue;
        }
        let s = -d.seed.pair(&w.normal, p) / &pm;
        if s <= Q::zero() || best.as_ref().is_some_and(|b| &s >= b) {
            continue;
        }
        let x = linalg::add(p, &linalg::scale(&s, m));
        if w.support.contains(&x) {
            best = Some(s);
        }
    }
    let Some(s) = best else { return Ok(None) };
    let x = linalg::add(p, &linalg::scale(&s, m));
    if !d.is_general(&x) {
        return Err(Error::NonGeneric(format!(
            "broken line meets a joint or wall boundary at {}",
            linalg::fmt_vec(&x)
        )));
    }
    let pf = d
        .g_x(&x)?
        .ok_or_else(|| Error::NonGeneric(format!("no wall function at {}", linalg::fmt_vec(&x))))?;
    Ok(Some(Hit {
        point: x,
        normal: pf.normal,
        func: pf.func,
    }))
}

fn m_part(e: &[i64], r: usize) -> QVec {
    linalg::qvec(&e[..r])
}

/// Checks that `q` is off every wall hyperplane of `d`.
pub fn check_generic_endpoint(d: &Diagram, q: &[Q]) -> Result<()> {
    for w in d.nontrivial_walls() {
        if d.seed.pair(&w.normal, q).is_zero() {
            return Err(Error::NonGeneric(format!(
                "endpoint lies on the hyperplane of {:?}",
                w.normal
            )));
        }
    }
    Ok(())
}

/// All broken lines for `p0` (an exponent `(m, n)` of the principal ring)
/// ending at `q` with final degree at most `k` above `p0`.
///
/// Lines are traced backwards from `q`: each candidate final exponent is
/// followed along `+m`, and at each wall either passes or undoes a bend.
pub fn enumerate_broken_lines(d: &Diagram, p0: &[i64], q: &[Q], k: u32) -> Result<Vec<BrokenLine>> {
    let r = d.rank();
    if p0.len() != 2 * r {
        return Err(Error::DimensionMismatch {
            expected: 2 * r,
            got: p0.len(),
        });
    }
    if q.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: q.len(),
        });
    }
    if p0.iter().all(|&x| x == 0) {
        return Err(Error::Input("initial exponent must be nonzero".into()));
    }
    check_generic_endpoint(d, q)?;
    let mut out = Vec::new();
    for delta in n_plus_up_to(r, k) {
        let lift = Ring::Prin.lift(&d.seed, &delta);
        let fin: Vec<i64> = p0.iter().zip(&lift).map(|(a, b)| a + b).collect();
        trace_back(d, p0, &fin, q, q, &mut Vec::new(), &mut out)?;
    }
    Ok(out)
}

/// A bend seen while tracing backwards: the bend, its coefficient, and the
/// exponent and end point of the segment after it.
type BackBend = (Bend, BigInt, Vec<i64>, QVec);

/// Traces the segment with exponent `cur` backwards from `pos`; the segment ends at `seg_end`.
fn trace_back(
    d: &Diagram,
    p0: &[i64],
    cur: &[i64],
    pos: &[Q],
    seg_end: &[Q],
    bends: &mut Vec<BackBend>,
    out: &mut Vec<BrokenLine>,
) -> Result<()> {
    let r = d.rank();
    if cur == p0 {
        let mut segments = vec![Segment {
            coeff: BigInt::one(),
            exponent: p0.to_vec(),
            start: None,
            end: seg_end.to_vec(),
        }];
        let mut coeff = BigInt::one();
        for (bend, a, exponent, end) in bends.iter().rev() {
            coeff *= a;
            segments.push(Segment {
                coeff: coeff.clone(),
                exponent: exponent.clone(),
                start: Some(bend.point.clone()),
                end: end.clone(),
            });
        }
        let endpoint = segments.last().expect("nonempty").end.clone();
        out.push(BrokenLine {
            segments,
            bends: bends.iter().rev().map(|b| b.0.clone()).collect(),
            endpoint,
        });
        return Ok(());
    }
    let m = m_part(cur, r);
    if linalg::is_zero(&m) {
        return Ok(());
    }
    let Some(hit) = first_hit(d, pos, &m)? else {
        return Ok(());
    };
    // pass through
    trace_back(d, p0, cur, &hit.point, seg_end, bends, out)?;
    // undo a bend by z^{j normal}
    let slack = (0..r)
        .filter(|&i| hit.normal[i] > 0)
        .map(|i| (cur[r + i] - p0[r + i]) / hit.normal[i])
        .min()
        .unwrap_or(0);
    if slack < 1 {
        return Ok(());
    }
    let (num, den) = d.seed.pair_int(&hit.normal, &cur[..r]);
    let series = hit.func.pow_rational(num.abs(), den, slack as usize)?;
    let lift = Ring::Prin.lift(&d.seed, &hit.normal);
    for (j, a) in series.coeffs().iter().enumerate().skip(1) {
        if a.is_zero() {
            continue;
        }
        let prev: Vec<i64> = cur
            .iter()
            .zip(&lift)
            .map(|(x, l)| x - l * j as i64)
            .collect();
        let bend = Bend {
            point: hit.point.clone(),
            normal: hit.normal.clone(),
            power: j,
        };
        bends.push((bend, a.clone(), cur.to_vec(), seg_end.to_vec()));
        trace_back(d, p0, &prev, &hit.point, &hit.point, bends, out)?;
        bends.pop();
    }
    Ok(())
}

/// Vectors of `N^+` (including zero) with total degree at most `k`.
fn n_plus_up_to(r: usize, k: u32) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, left: usize, budget: i64, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=budget {
            prefix.push(x);
            rec(prefix, left - 1, budget - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), r, k as i64, &mut out);
    out
}
