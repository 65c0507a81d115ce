use std::path::Path;

use cluster_scatter::atlas::{prin_m, split_x_part, DtTransform};
use cluster_scatter::folding::{fold_seed, GroupAction};
use cluster_scatter::lattice::{Seed, Side};
use cluster_scatter::linalg::qvec;
use cluster_scatter::scattering::{complete_rank2, fan_walls, finite_type_diagram, Diagram};
use cluster_scatter::suite;
use cluster_scatter::theta::{subseed_embedding, theta_expand};
use cluster_scatter::Error;
use serde_json::{json, Value};

use crate::render;
use crate::Common;

/// Exit 3: unreadable or invalid input, or an unsupported request.
pub enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub struct Output {
    pub json: Value,
    pub svg: Option<String>,
    pub summary: String,
    /// `false` on a verification mismatch (exit 2).
    pub ok: bool,
}

impl Output {
    fn report(json: Value, summary: String) -> Output {
        Output {
            json,
            svg: None,
            summary,
            ok: true,
        }
    }
}

type Run = Result<Output, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn seed_json(common: &Common) -> Result<(Seed, Value), Failure> {
    let path = common
        .seed_file
        .as_ref()
        .ok_or_else(|| Failure::Input("--seed-file is required".into()))?;
    let text = read(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
    Ok((Seed::from_json(&text)?, v))
}

fn load_seed(common: &Common) -> Result<Seed, Failure> {
    Ok(seed_json(common)?.0)
}

fn load_action(path: &Path, rank: usize) -> Result<GroupAction, Failure> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(GroupAction::from_json(rank, &v)?)
}

/// The finite-type diagram, or the rank-2 completion when the mutation tree does not close.
fn build_diagram(seed: &Seed, order: u32, depth: usize) -> Result<(Diagram, bool), Failure> {
    match finite_type_diagram(seed, order, depth) {
        Ok(d) => Ok((d, true)),
        Err(Error::NotFiniteType { .. }) if seed.rank == 2 => {
            Ok((complete_rank2(&Diagram::initial(seed, order), order)?, false))
        }
        Err(Error::NotFiniteType { depth }) => Err(Failure::Input(format!(
            "seed is not of finite type within depth {depth} and has rank {}; only rank-2 completion is available",
            seed.rank
        ))),
        Err(e) => Err(e.into()),
    }
}

pub fn scatter(common: &Common) -> Run {
    let seed = load_seed(common)?;
    let (d, finite) = build_diagram(&seed, common.order, common.depth.unwrap_or(12))?;
    let how = if finite {
        "finite type"
    } else {
        "rank-2 completion"
    };
    let summary = format!(
        "{} walls at order {} ({how})",
        d.nontrivial_walls().count(),
        common.order
    );
    Ok(Output::report(d.to_json(), summary))
}

pub fn fold(common: &Common, action_file: &Path) -> Run {
    let seed = load_seed(common)?;
    let action = load_action(action_file, seed.rank)?;
    let fm = fold_seed(&seed, action.generators)?;
    let depth = common.depth.unwrap_or(12);
    let (d, _) = build_diagram(&seed, common.order, depth)?;
    let (direct, _) = build_diagram(&fm.folded, common.order, depth)?;
    let folded = fm.fold_diagram(&d)?;
    let r = fm.verify_folded_equivalence(&d, &direct, 20, common.sample_seed)?;
    let witness = r
        .witness
        .as_ref()
        .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let json = json!({
        "folded_seed": fm.folded.to_json(),
        "orbits": fm.action.orbits.iter().map(|o| o.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "folded_diagram": folded.to_json(),
        "report": {
            "equivalent": r.equivalent,
            "witness": witness,
            "loops_checked": r.loops_checked,
            "loop_failures": r.loop_failures,
            "points_checked": r.points_checked,
            "product_failures": r.product_failures,
        },
    });
    let summary = format!(
        "folded rank {} -> {}: equivalent: {}, {} loops and {} points checked",
        seed.rank, fm.folded.rank, r.equivalent, r.loops_checked, r.points_checked
    );
    Ok(Output {
        ok: r.passed(),
        ..Output::report(json, summary)
    })
}

fn sub_seed(seed: &Seed, idx: &[usize]) -> Result<Seed, Failure> {
    let skew = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| seed.skew[i][j]).collect())
        .collect();
    Ok(Seed::new(skew, idx.iter().map(|&i| seed.d[i]).collect())?)
}

pub fn theta(common: &Common, p0: &[i64], point: &[i64], subseed: Option<&[usize]>) -> Run {
    let seed = load_seed(common)?;
    let idx: Option<Vec<usize>> = match subseed {
        Some(s) if s.len() != 2 || s.iter().any(|&i| i == 0 || i > seed.rank) => {
            return Err(Failure::Input(format!(
                "--subseed needs two indices in 1..={}",
                seed.rank
            )))
        }
        Some(s) => Some(s.iter().map(|i| i - 1).collect()),
        None if seed.rank == 2 => None,
        None => {
            return Err(Failure::Input(format!(
                "broken lines need a rank-2 diagram; pass --subseed for rank {}",
                seed.rank
            )))
        }
    };
    let rank2 = match &idx {
        Some(i) => sub_seed(&seed, i)?,
        None => seed.clone(),
    };
    if p0.len() != 4 || point.len() != 2 {
        return Err(Failure::Input(
            "--p0 needs 4 entries (m, n) and --point needs 2".into(),
        ));
    }
    let (d, _) = build_diagram(&rank2, common.order, common.depth.unwrap_or(12))?;
    let t = theta_expand(&d, p0, &qvec(point), common.order)?;
    let mut json = t.to_json();
    if let Some(i) = &idx {
        let emb = subseed_embedding(&seed, &rank2, i)?;
        json["embedded"] = json!({
            "indices": i.iter().map(|x| x + 1).collect::<Vec<_>>(),
            "p0": emb.apply_exp(p0),
            "poly": emb.apply(&t.poly)?.to_json(),
        });
    }
    let summary = format!(
        "{} broken lines, {} terms, positive: {}",
        t.lines,
        t.poly.len(),
        t.is_positive()
    );
    Ok(Output::report(json, summary))
}

pub fn dt(common: &Common, action_file: Option<&Path>, sequence: Option<&[usize]>) -> Run {
    let (seed, raw) = seed_json(common)?;
    let seq: Vec<usize> = match sequence {
        Some(s) => s.to_vec(),
        None => raw
            .get("green_sequence")
            .and_then(Value::as_array)
            .ok_or_else(|| {
                Failure::Input("no --sequence and no green_sequence in the seed file".into())
            })?
            .iter()
            .map(|x| x.as_u64().map(|i| i as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Failure::Input("green_sequence must list indices".into()))?,
    };
    if seq.iter().any(|&i| i == 0 || i > seed.rank) {
        return Err(Failure::Input(format!(
            "sequence {seq:?} is not 1-based in 1..={}",
            seed.rank
        )));
    }
    let zero_based: Vec<usize> = seq.iter().map(|i| i - 1).collect();
    let dt = DtTransform::new(&seed, &zero_based)?;
    let mut generators = Vec::new();
    let mut images = Vec::new();
    let mut lines = vec![format!(
        "DT from a maximal green sequence of length {}",
        seq.len()
    )];
    for i in 0..seed.rank {
        let img = dt.apply(&prin_m(&seed.basis_vector(i)))?;
        let (g, f) = split_x_part(&seed, &img)?;
        lines.push(format!("F_{}: {} terms", i + 1, f.len()));
        generators.push(json!({"generator": i + 1, "g_vector": g, "F": f.to_json()}));
        images.push(img);
    }
    let mut json = json!({"sequence": seq, "generators": generators});
    if let Some(path) = action_file {
        let fm = fold_seed(&seed, load_action(path, seed.rank)?.generators)?;
        let mut folded = Vec::new();
        for (a, orbit) in fm.action.orbits.iter().enumerate() {
            let rep = orbit[0];
            let (g, f) = split_x_part(&fm.folded, &fm.q_tilde(&images[rep])?)?;
            let up = dt.apply_plus_minus(&prin_m(&seed.basis_vector(rep)))?;
            let (h, gp) = split_x_part(&fm.folded, &fm.q_tilde(&up)?)?;
            lines.push(format!(
                "folded F_{}: {} terms, G_{}: {} terms",
                a + 1,
                f.len(),
                a + 1,
                gp.len()
            ));
            folded.push(json!({
                "generator": a + 1,
                "g_vector": g,
                "F": f.to_json(),
                "plus_minus_exponent": h,
                "G": gp.to_json(),
            }));
        }
        json["folded_seed"] = fm.folded.to_json();
        json["folded"] = Value::Array(folded);
    }
    Ok(Output::report(json, lines.join("\n")))
}

pub fn verify() -> Run {
    let results = suite::run_all();
    let passed = results.iter().filter(|r| r.passed).count();
    let mut lines: Vec<String> = results.iter().map(|r| r.line()).collect();
    lines.push(format!("{passed}/{} criteria passed", results.len()));
    let json = json!({
        "criteria": serde_json::to_value(&results).map_err(|e| Failure::Input(e.to_string()))?,
        "passed": passed,
        "total": results.len(),
    });
    Ok(Output {
        ok: suite::all_passed(&results),
        ..Output::report(json, lines.join("\n"))
    })
}

pub fn render(common: &Common, plane: &[i64]) -> Run {
    let seed = load_seed(common)?;
    let order = common.order;
    let walls: Vec<Diagram> = match seed.rank {
        2 => vec![build_diagram(&seed, order, common.depth.unwrap_or(12))?.0],
        3 => match finite_type_diagram(&seed, order, common.depth.unwrap_or(12)) {
            Ok(d) => vec![d],
            Err(Error::NotFiniteType { .. }) => {
                let depth = common.depth.unwrap_or(3);
                vec![
                    fan_walls(&seed, Side::Plus, depth, order)?,
                    fan_walls(&seed, Side::Minus, depth, order)?,
                ]
            }
            Err(e) => return Err(e.into()),
        },
        r => {
            return Err(Failure::Input(format!(
                "rendering needs rank 2 or 3, got {r}"
            )))
        }
    };
    let svg = if seed.rank == 2 {
        render::rank2(&walls[0])
    } else {
        render::on_plane(&walls, plane)?
    };
    let count: usize = walls.iter().map(|d| d.nontrivial_walls().count()).sum();
    Ok(Output {
        svg: Some(svg),
        ..Output::report(Value::Null, format!("{count} walls drawn"))
    })
}
