use std::fmt::Write;

use cluster_scatter::lattice::Cone;
use cluster_scatter::linalg::{self, QVec, Q};
use cluster_scatter::scattering::Diagram;
use num_traits::ToPrimitive;

use crate::commands::Failure;

const SIZE: f64 = 400.0;
const CENTRE: f64 = 200.0;
const REACH: f64 = 180.0;

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
}

fn line(out: &mut String, a: (f64, f64), b: (f64, f64), style: &str) {
    let _ = writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {style}/>"#,
        a.0, a.1, b.0, b.1
    );
}

const AXIS: &str = r##"stroke="#bbbbbb" stroke-width="0.75" stroke-dasharray="4 3""##;
const WALL: &str = r##"stroke="#1f3b73" stroke-width="1.5""##;

/// Rays and lines of a rank-2 diagram, from the origin to the frame.
pub fn rank2(d: &Diagram) -> String {
    let mut out = String::new();
    header(&mut out);
    line(
        &mut out,
        (CENTRE - REACH, CENTRE),
        (CENTRE + REACH, CENTRE),
        AXIS,
    );
    line(
        &mut out,
        (CENTRE, CENTRE - REACH),
        (CENTRE, CENTRE + REACH),
        AXIS,
    );
    let to_px = |v: &QVec, s: f64| {
        let (x, y) = (f(&v[0]), f(&v[1]));
        let n = (x * x + y * y).sqrt().max(f64::MIN_POSITIVE);
        (CENTRE + s * REACH * x / n, CENTRE - s * REACH * y / n)
    };
    for w in d.sorted().walls {
        for r in w.support.rays() {
            line(&mut out, (CENTRE, CENTRE), to_px(r, 1.0), WALL);
        }
        for l in w.support.lines() {
            line(&mut out, to_px(l, -1.0), to_px(l, 1.0), WALL);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Traces of rank-3 walls on the plane `u·x = 1`, clipped to `|x_i| ≤ 3 u·x`,
/// drawn in barycentric position `Σ u_i x_i V_i`.
pub fn on_plane(diagrams: &[Diagram], u: &[i64]) -> Result<String, Failure> {
    if u.len() != 3 || u.iter().any(|&x| x <= 0) {
        return Err(Failure::Input(
            "--plane needs three positive entries".into(),
        ));
    }
    let uq = linalg::qvec(u);
    let bound = 3;
    let mut ineqs = vec![uq.clone()];
    for i in 0..3 {
        for s in [-1, 1] {
            let mut a: QVec = uq
                .iter()
                .map(|x| x * Q::from_integer(bound.into()))
                .collect();
            a[i] += Q::from_integer(s.into());
            ineqs.push(a);
        }
    }
    let window = Cone::from_hrep(&ineqs, &[], 3);
    let corners = [(CENTRE, 30.0), (40.0, 330.0), (360.0, 330.0)];
    let to_px = |v: &QVec| {
        let s = f(&linalg::dot(&uq, v));
        let mut p = (0.0, 0.0);
        for i in 0..3 {
            let w = f(&uq[i]) * f(&v[i]) / s;
            p.0 += w * corners[i].0;
            p.1 += w * corners[i].1;
        }
        // shrink about the centroid so the clipped window fits
        let c = (CENTRE, 230.0);
        (c.0 + (p.0 - c.0) / 4.0, c.1 + (p.1 - c.1) / 4.0)
    };
    let mut out = String::new();
    header(&mut out);
    for i in 0..3 {
        line(&mut out, corners[i], corners[(i + 1) % 3], AXIS);
    }
    for d in diagrams {
        for w in d.sorted().walls {
            let piece = w.support.intersect(&window);
            let pts: Vec<(f64, f64)> = piece
                .rays()
                .iter()
                .filter(|r| linalg::sign(&linalg::dot(&uq, r)) > 0)
                .map(to_px)
                .collect();
            if pts.len() >= 2 {
                line(&mut out, pts[0], pts[1], WALL);
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
