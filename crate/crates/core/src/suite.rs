//! The reproduction suite: twelve exact checks of the worked computations on
//! the `S²₄`, Markov, `A2`, `A3` and `B2` seeds, each with a time limit.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::atlas::{
    a_var, alpha, alpha_inverse, build_atilde, compose_a, eta, eta_monomial_regular_on_both_charts,
    in_x_variables, mutate_a, prin_m, pull, sample_triples, split_x_part, to_a_side, up_membership,
    verify_cocycle, verify_cocycle_at, CrossEdge, DtTransform,
};
use crate::folding::{
    check_admissible, equivariance_witness, fold_seed, incoming_walls_invariant, FoldingMap,
};
use crate::lattice::{chamber_lattice_intersection, PrincipalSeed, Seed, Side};
use crate::linalg::{fmt_vec, qvec};
use crate::poly::Laurent;
use crate::scattering::{
    apply_sequence, complete_rank2, finite_type_diagram, rank2_loop, sample_general_points,
    sample_generic_loops, Diagram, Ring,
};
use crate::theta::{
    kronecker_diagram, kronecker_seed, structure_constant, subseed_embedding, theta_expand,
    ThetaExpansion,
};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub exact: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({} ms / limit {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

pub fn s24_seed() -> Seed {
    Seed::skew_symmetric(vec![
        vec![0, 1, -1, 0, 1, -1],
        vec![-1, 0, 1, -1, 0, 1],
        vec![1, -1, 0, 1, -1, 0],
        vec![0, 1, -1, 0, 1, -1],
        vec![-1, 0, 1, -1, 0, 1],
        vec![1, -1, 0, 1, -1, 0],
    ])
    .expect("valid seed")
}

/// `1 3 2 4 6 5 1 6 4 3 2 5`, 0-based.
pub fn s24_green_sequence() -> Vec<usize> {
    vec![0, 2, 1, 3, 5, 4, 0, 5, 3, 2, 1, 4]
}

pub fn a2_seed() -> Seed {
    Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).expect("valid seed")
}

pub fn a3_seed() -> Seed {
    Seed::skew_symmetric(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]).expect("valid seed")
}

pub fn b2_seed() -> Seed {
    Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 1]).expect("valid seed")
}

fn poly(nvars: usize, terms: &[(Vec<i64>, i64)]) -> Laurent {
    Laurent::from_terms(
        nvars,
        terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c))),
    )
}

/// `F = 1 + y1 + y1y3 + y1y6 + y1y3y6 + y1y3y5y6 + y1y2y3y6 + y1y2y3y5y6 + y1²y2y3y5y6`.
pub fn reference_f() -> Laurent {
    let mono = |idx: &[usize]| {
        let mut e = vec![0; 6];
        for &i in idx {
            e[i - 1] += 1;
        }
        (e, 1)
    };
    poly(
        6,
        &[
            mono(&[]),
            mono(&[1]),
            mono(&[1, 3]),
            mono(&[1, 6]),
            mono(&[1, 3, 6]),
            mono(&[1, 3, 5, 6]),
            mono(&[1, 2, 3, 6]),
            mono(&[1, 2, 3, 5, 6]),
            mono(&[1, 1, 2, 3, 5, 6]),
        ],
    )
}

/// `F̄ = 1 + w1 + 2w1w3 + w1w3² + 2w1w2w3² + w1w2²w3² + w1²w2²w3²`.
pub fn reference_fbar() -> Laurent {
    poly(
        3,
        &[
            (vec![0, 0, 0], 1),
            (vec![1, 0, 0], 1),
            (vec![1, 0, 1], 2),
            (vec![1, 0, 2], 1),
            (vec![1, 1, 2], 2),
            (vec![1, 2, 2], 1),
            (vec![2, 2, 2], 1),
        ],
    )
}

/// `G = 1 + w1 + 2w1w2 + w1w2² + 2w1w2²w3 + w1w2²w3² + w1²w2²w3²`.
pub fn reference_g() -> Laurent {
    poly(
        3,
        &[
            (vec![0, 0, 0], 1),
            (vec![1, 0, 0], 1),
            (vec![1, 1, 0], 2),
            (vec![1, 2, 0], 1),
            (vec![1, 2, 1], 2),
            (vec![1, 2, 2], 1),
            (vec![2, 2, 2], 1),
        ],
    )
}

fn as_exps(p: &Laurent) -> Vec<(Vec<i64>, i64)> {
    p.terms()
        .map(|(e, c)| (e.clone(), i64::try_from(c).expect("small coefficient")))
        .collect()
}

/// Shared inputs: the `S²₄` DT transformation and its folding to Markov.
struct Context {
    s24: Seed,
    dt: DtTransform,
    fm: FoldingMap,
    /// `DT(z^{(f_i, 0)})` for the orbit representatives.
    dt_images: Vec<Laurent>,
    thetas: Vec<ThetaExpansion>,
}

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: crate::Error) -> String {
    format!("error: {e}")
}

fn run(id: u32, name: &'static str, limit: Duration, f: impl FnOnce() -> Check) -> CriterionResult {
    let t = Instant::now();
    let out = f();
    let elapsed = t.elapsed();
    let in_time = elapsed <= limit;
    let (exact, mut detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if !in_time {
        detail.push_str("; over time limit");
    }
    CriterionResult {
        id,
        name,
        passed: exact && in_time,
        exact,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.as_millis(),
        detail,
    }
}

fn c1(ctx: &mut Option<Context>) -> Check {
    let s24 = s24_seed();
    let dt = DtTransform::new(&s24, &s24_green_sequence()).map_err(err)?;
    let fm = fold_seed(&s24, vec![vec![3, 4, 5, 0, 1, 2]]).map_err(err)?;
    let img = dt.apply(&prin_m(&s24.basis_vector(0))).map_err(err)?;
    let (m0, p) = split_x_part(&s24, &img).map_err(err)?;
    ensure(
        m0 == vec![-1, 0, 0, 0, 0, 0],
        format!("leading exponent {m0:?}"),
    )?;
    ensure(p == reference_f(), format!("F = {p}"))?;
    let terms = p.len();
    *ctx = Some(Context {
        s24,
        dt,
        fm,
        dt_images: vec![img],
        thetas: vec![],
    });
    Ok(format!("DT(z^(f1,0)) = z^(-f1,0)·F, {terms} terms"))
}

fn c2(ctx: &Context) -> Check {
    let folded = ctx.fm.q_tilde(&ctx.dt_images[0]).map_err(err)?;
    let (m0, p) = split_x_part(&ctx.fm.folded, &folded).map_err(err)?;
    ensure(m0 == vec![-1, 0, 0], format!("leading exponent {m0:?}"))?;
    ensure(p == reference_fbar(), format!("q̃ image has F̄ = {p}"))?;
    let f_up = in_x_variables(&ctx.s24, &as_exps(&reference_f()));
    let f_down = in_x_variables(&ctx.fm.folded, &as_exps(&reference_fbar()));
    ensure(
        ctx.fm.q_tilde(&f_up).map_err(err)? == f_down,
        "q̃(F) differs from F̄",
    )?;
    Ok(format!(
        "q̃ image = z^(-f1,0)·F̄ and q̃(F) = F̄, {} terms",
        p.len()
    ))
}

fn c3(ctx: &Context) -> Check {
    let up = ctx
        .dt
        .apply_plus_minus(&prin_m(&ctx.s24.basis_vector(0)))
        .map_err(err)?;
    let (m0, p) = split_x_part(&ctx.fm.folded, &ctx.fm.q_tilde(&up).map_err(err)?).map_err(err)?;
    ensure(m0 == vec![1, 0, 0], format!("leading exponent {m0:?}"))?;
    ensure(p == reference_g(), format!("G = {p}"))?;
    Ok(format!("q̃ 𝔭+−(z^(f1,0)) = z^(f1,0)·G, {} terms", p.len()))
}

fn c4(ctx: &mut Context) -> Check {
    let k = 6;
    let d = kronecker_diagram(k).map_err(err)?;
    let p0 = [1, -1, 0, 0];
    let t = theta_expand(&d, &p0, &qvec(&[7, 5]), k).map_err(err)?;
    let three = [(vec![0, 0], 1), (vec![0, 1], 1), (vec![1, 1], 1)];
    let expected = in_x_variables(&d.seed, &three).mul_monomial(&p0, &BigInt::from(1));
    ensure(t.lines == 3, format!("{} broken lines", t.lines))?;
    ensure(t.poly == expected, format!("expansion {}", t.poly))?;
    let m = &ctx.fm.folded;
    let emb = subseed_embedding(m, &kronecker_seed(), &[0, 1]).map_err(err)?;
    let three_m = [(vec![0, 0, 0], 1), (vec![0, 1, 0], 1), (vec![1, 1, 0], 1)];
    let expected_m =
        in_x_variables(m, &three_m).mul_monomial(&[1, -1, 0, 0, 0, 0], &BigInt::from(1));
    ensure(
        emb.apply(&t.poly).map_err(err)? == expected_m,
        "embedded expansion differs",
    )?;
    ctx.thetas.push(t);
    Ok("ϑ_(f1-f2) = z^(f1-f2)(1 + x2 + x1x2) at order 6".into())
}

fn c5() -> Check {
    let k = 8;
    let fm = fold_seed(&a3_seed(), vec![vec![2, 1, 0]]).map_err(err)?;
    let d = finite_type_diagram(&a3_seed(), k, 12).map_err(err)?;
    let direct = complete_rank2(&Diagram::initial(&b2_seed(), k), k).map_err(err)?;
    let r = fm
        .verify_folded_equivalence(&d, &direct, 20, 5)
        .map_err(err)?;
    ensure(r.passed(), format!("{r:?}"))?;
    Ok(format!(
        "folded A3 ≡ completed B2, {} loops and {} points",
        r.loops_checked, r.points_checked
    ))
}

fn c6() -> Check {
    let k = 12u32;
    let d = complete_rank2(&Diagram::initial(&a2_seed(), k), k).map_err(err)?;
    let seq = d.path_sequence(&rank2_loop(&d)).map_err(err)?;
    let g = Ring::Prin.grading(2);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
        let z = Laurent::var_power(&e);
        let top = g.degree(&e) + k as i64;
        let out = apply_sequence(&d.seed, Ring::Prin, &seq, &z, top).map_err(err)?;
        ensure(out == z, format!("loop moves z^{e:?} to {out}"))?;
    }
    Ok(format!(
        "{} walls, {} crossings, 20 monomials fixed",
        d.walls.len(),
        seq.len()
    ))
}

fn c7(ctx: &mut Context) -> Check {
    let e = eta();
    let ids: Vec<_> = (0..3).map(a_var).collect();
    let al = alpha().map_err(err)?;
    for k in 0..3 {
        let mu = mutate_a(k).map_err(err)?;
        ensure(
            pull(&e, &mu).map_err(err)? == e,
            format!("μ_{}*(η) ≠ η", k + 1),
        )?;
        for (i, a) in ids.iter().enumerate() {
            let lhs = pull(&pull(a, &mu).map_err(err)?, &al).map_err(err)?;
            let rhs = pull(&pull(a, &al).map_err(err)?, &mu).map_err(err)?;
            ensure(
                lhs == rhs,
                format!("α*μ_{}* ≠ μ_{}*α* on A_{}", k + 1, k + 1, i + 1),
            )?;
        }
    }
    let inv = alpha_inverse().map_err(err)?;
    ensure(
        pull(&e, &inv).map_err(err)? == e.recip().map_err(err)?,
        "(α⁻¹)*(η) ≠ η⁻¹",
    )?;
    ensure(
        compose_a(&al, &inv).map_err(err)? == ids,
        "α⁻¹ is not inverse to α",
    )?;
    // ϑ_(f_i - f_(i+1)) from broken lines on the Kronecker sub-diagram
    let m = ctx.fm.folded.clone();
    let kd = kronecker_diagram(6).map_err(err)?;
    let t = theta_expand(&kd, &[1, -1, 0, 0], &qvec(&[3, 11]), 6).map_err(err)?;
    for i in 0..3 {
        let emb = subseed_embedding(&m, &kronecker_seed(), &[i, (i + 1) % 3]).map_err(err)?;
        let a = to_a_side(&m, &emb.apply(&t.poly).map_err(err)?).map_err(err)?;
        let want = e.mul(&ids[(i + 2) % 3]).map_err(err)?;
        ensure(
            a == want,
            format!("ϑ_(f{}-f{}) = {a:?}", i + 1, (i + 1) % 3 + 1),
        )?;
    }
    ctx.thetas.push(t);
    // ϑ_(-f_i) from the folded DT
    let e2 = e.pow(2).map_err(err)?;
    for (i, orbit) in ctx.fm.action.orbits.clone().iter().enumerate() {
        if ctx.dt_images.len() <= i {
            let img = ctx
                .dt
                .apply(&prin_m(&ctx.s24.basis_vector(orbit[0])))
                .map_err(err)?;
            ctx.dt_images.push(img);
        }
        let folded = ctx.fm.q_tilde(&ctx.dt_images[i]).map_err(err)?;
        let a = to_a_side(&m, &folded).map_err(err)?;
        ensure(
            a == ids[i].mul(&e2).map_err(err)?,
            format!("ϑ_(-f{}) = {a:?}", i + 1),
        )?;
    }
    Ok(
        "μ_k*η = η, α*μ_k* = μ_k*α*, (α⁻¹)*η = η⁻¹, ϑ_(f_i-f_(i+1)) = A_(i+2)η, ϑ_(-f_i) = A_iη²"
            .into(),
    )
}

fn c8() -> Check {
    let k = 8;
    let mut details = Vec::new();
    let a3 = a3_seed();
    let s24 = s24_seed();
    let cases: [(&str, Seed, Vec<Vec<usize>>, Diagram); 2] = [
        (
            "A3/(1 3)",
            a3.clone(),
            vec![vec![2, 1, 0]],
            finite_type_diagram(&a3, k, 12).map_err(err)?,
        ),
        (
            "S24/(1 4),(2 5),(3 6)",
            s24.clone(),
            vec![
                vec![3, 1, 2, 0, 4, 5],
                vec![0, 4, 2, 3, 1, 5],
                vec![0, 1, 5, 3, 4, 2],
            ],
            Diagram::initial(&s24, k),
        ),
    ];
    for (name, seed, gens, d) in cases {
        let action = check_admissible(&seed, gens).map_err(err)?;
        ensure(
            incoming_walls_invariant(&action, &d),
            format!("{name}: incoming walls not invariant"),
        )?;
        let pts = sample_general_points(&d, 50, 8);
        ensure(pts.len() == 50, format!("{name}: {} points", pts.len()))?;
        if let Some((x, pi)) = equivariance_witness(&action, &d, &pts).map_err(err)? {
            return Err(format!(
                "{name}: π·g_x ≠ g_(π⁻¹)*x at {}, π = {pi:?}",
                fmt_vec(&x)
            ));
        }
        details.push(format!("{name} (|Π| = {})", action.elements.len()));
    }
    Ok(format!(
        "{}: invariant at 50 points each",
        details.join(", ")
    ))
}

fn c9(ctx: &Context) -> Check {
    let k = 8;
    let mut loops = 0;
    for (name, seed) in [("A2", a2_seed()), ("A3", a3_seed()), ("B2", b2_seed())] {
        let d = finite_type_diagram(&seed, k, 12).map_err(err)?;
        let ls = sample_generic_loops(&d, 20, 4, 9);
        ensure(ls.len() == 20, format!("{name}: {} loops", ls.len()))?;
        for l in &ls {
            if let Some(i) = d.loop_defect(l).map_err(err)? {
                return Err(format!("{name}: loop defect at generator {i}"));
            }
        }
        loops += ls.len();
    }
    let a2 = a2_seed();
    let a2_atlas = build_atilde(
        &a2,
        2,
        &CrossEdge::from_dt(&DtTransform::new(&a2, &[0, 1]).map_err(err)?).map_err(err)?,
    )
    .map_err(err)?;
    let t = sample_triples(&a2_atlas, 200, 9);
    let rep = verify_cocycle(&a2_atlas, &t).map_err(err)?;
    ensure(
        rep.passed(),
        format!("A2 cocycle failures {:?}", rep.failures),
    )?;
    let mk = build_atilde(
        &ctx.fm.folded,
        2,
        &CrossEdge::folded(&ctx.dt, &ctx.fm).map_err(err)?,
    )
    .map_err(err)?;
    ensure(
        mk.count(Side::Plus) == 10 && mk.count(Side::Minus) == 10,
        format!(
            "Markov charts {}+{}",
            mk.count(Side::Plus),
            mk.count(Side::Minus)
        ),
    )?;
    let mt = sample_triples(&mk, 60, 11);
    let mrep = verify_cocycle_at(&mk, &mt, k).map_err(err)?;
    ensure(
        mrep.passed(),
        format!("Markov cocycle failures {:?}", mrep.failures),
    )?;
    Ok(format!(
        "{loops} loops; A2 atlas {} triples exact; Markov atlas {} triples at order {k}",
        rep.checked, mrep.checked
    ))
}

fn c10(ctx: &mut Context) -> Check {
    let k = 6;
    let a2 = a2_seed();
    let d = finite_type_diagram(&a2, k, 10).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut pairs = 0;
    while pairs < 10 {
        let p: Vec<i64> = vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3), 0, 0];
        let q: Vec<i64> = vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3), 0, 0];
        if p == vec![0; 4] || q == vec![0; 4] {
            continue;
        }
        let r: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
        let c = structure_constant(&d, &p, &q, &r, k).map_err(err)?;
        ensure(c >= BigInt::from(1), format!("α({p:?}, {q:?}, p+q) = {c}"))?;
        for (e, at) in [(&p, [5, 3]), (&q, [-2, 7]), (&p, [3, -11])] {
            ctx.thetas
                .push(theta_expand(&d, e, &qvec(&at), k).map_err(err)?);
        }
        pairs += 1;
    }
    let bad = ctx.thetas.iter().filter(|t| !t.is_positive()).count();
    ensure(
        bad == 0,
        format!("{bad} expansions with non-positive coefficients"),
    )?;
    Ok(format!(
        "α(p,q,p+q) ≥ 1 on {pairs} pairs; {} theta expansions positive",
        ctx.thetas.len()
    ))
}

fn c11() -> Check {
    ensure(
        !up_membership(&[0, 0, 0], 1).map_err(err)?,
        "η passes the membership test",
    )?;
    for i in 0..3 {
        let mut a = [0; 3];
        a[i] = 1;
        for b in 0..=2 {
            ensure(
                up_membership(&a, b).map_err(err)?,
                format!("A_{}η^{b} fails", i + 1),
            )?;
        }
    }
    ensure(
        !eta_monomial_regular_on_both_charts(&[0, 0, 0], 1).map_err(err)?,
        "η regular on both charts",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut inside = 0;
    for _ in 0..100 {
        let a: Vec<i64> = (0..3).map(|_| rng.gen_range(0..3)).collect();
        let b = rng.gen_range(-3..10);
        let crit = up_membership(&a, b).map_err(err)?;
        let direct = eta_monomial_regular_on_both_charts(&a, b).map_err(err)?;
        ensure(
            crit == direct,
            format!("A^{a:?}η^{b}: criterion {crit}, direct {direct}"),
        )?;
        inside += crit as usize;
    }
    Ok(format!(
        "criterion agrees with two-chart regularity on 100 monomials ({inside} inside)"
    ))
}

fn c12(ctx: &Context) -> Check {
    let root = PrincipalSeed::new(&ctx.fm.folded);
    let mut verts = vec![root.clone()];
    for k in 0..3 {
        verts.push(root.mutate(k).map_err(err)?);
    }
    let mut pairs = 0;
    for v in &verts {
        for w in &verts {
            let lc = chamber_lattice_intersection(
                &w.chamber_cone(Side::Minus),
                &v.chamber_cone(Side::Plus),
            );
            ensure(
                lc.is_trailing_subspace(3),
                format!("C⁻{:?} ∩ C⁺{:?} = {lc:?}", w.path, v.path),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} chamber pairs meet in 0 ⊕ N"))
}

/// Runs all twelve checks in order.
pub fn run_all() -> Vec<CriterionResult> {
    let sec = Duration::from_secs;
    let mut out = Vec::new();
    let mut ctx = None;
    out.push(run(1, NAMES[0], sec(10), || c1(&mut ctx)));
    let Some(mut ctx) = ctx else {
        for (id, name) in NAMES.iter().enumerate().skip(1) {
            out.push(CriterionResult {
                id: id as u32 + 1,
                name,
                passed: false,
                exact: false,
                elapsed_ms: 0,
                limit_ms: 0,
                detail: "skipped: the S24 DT transformation failed".into(),
            });
        }
        return out;
    };
    out.push(run(2, NAMES[1], sec(1), || c2(&ctx)));
    out.push(run(3, NAMES[2], sec(10), || c3(&ctx)));
    out.push(run(4, NAMES[3], sec(1), || c4(&mut ctx)));
    out.push(run(5, NAMES[4], sec(5), c5));
    out.push(run(6, NAMES[5], sec(5), c6));
    out.push(run(7, NAMES[6], sec(1), || c7(&mut ctx)));
    out.push(run(8, NAMES[7], sec(10), c8));
    out.push(run(9, NAMES[8], sec(30), || c9(&ctx)));
    out.push(run(10, NAMES[9], sec(10), || c10(&mut ctx)));
    out.push(run(11, NAMES[10], sec(5), c11));
    out.push(run(12, NAMES[11], sec(1), || c12(&ctx)));
    out
}

const NAMES: [&str; 12] = [
    "DT of z^(f1,0) on S24 is z^(-f1,0)·F",
    "folding the DT image gives z^(-f1,0)·F̄",
    "reverse-inverse image gives z^(f1,0)·G",
    "Markov theta from the Kronecker sub-diagram",
    "folded A3 diagram is equivalent to completed B2",
    "A2 loop product fixes 20 monomials at order 12",
    "η/α identities and generator identities",
    "incoming-wall invariance and equivariance",
    "loop consistency and atlas cocycle",
    "theta structure constants and positivity",
    "membership criterion for the glued ring",
    "positive and negative chambers meet in 0 ⊕ N",
];

pub fn all_passed(results: &[CriterionResult]) -> bool {
    results.iter().all(|r| r.passed)
}
