use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde_json::json;
use walkcent::centrality::{
    degree_centrality, eigenvector_centrality, exp_subgraph, hits, katz, resolvent_subgraph,
    total_communicability,
};
use walkcent::pagerank::{build_model, heat_kernel_rowsums, pagerank_power, small_alpha_limit, DEFAULT_ALPHA};
use walkcent::ranking::{convergence_report, intersection_distance, limit_sweep, rank, resolvent_grid, DEFAULT_TIE_TOL};
use walkcent::spectral::{spectral_radius, DEFAULT_MAX_ITER};
use walkcent::{fixtures, generate as gen, Graph64, Preference, Ranking64, Side, SweepFamily, TopK};

use crate::io::{self, sig12, usage};
use crate::{CompareArgs, ComputeArgs, FamilyArg, GenerateArgs, MeasureArg, Model, SideArg, SweepArgs};

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Broadcast => Side::Broadcast,
        SideArg::Receive => Side::Receive,
    }
}

fn family(m: FamilyArg) -> SweepFamily {
    match m {
        FamilyArg::ExpSubgraph => SweepFamily::ExpSubgraph,
        FamilyArg::TotalCommunicability => SweepFamily::TotalCommunicability,
        FamilyArg::ResolventSubgraph => SweepFamily::ResolventSubgraph,
        FamilyArg::Katz => SweepFamily::Katz,
        FamilyArg::Pagerank => SweepFamily::PageRank,
    }
}

fn measure_name(m: MeasureArg) -> &'static str {
    match m {
        MeasureArg::Degree => "degree",
        MeasureArg::Eigenvector => "eigenvector",
        MeasureArg::Katz => "katz",
        MeasureArg::ResolventSubgraph => "resolvent-subgraph",
        MeasureArg::ExpSubgraph => "exp-subgraph",
        MeasureArg::TotalCommunicability => "total-communicability",
        MeasureArg::HitsHub => "hits-hub",
        MeasureArg::HitsAuthority => "hits-authority",
        MeasureArg::Pagerank => "pagerank",
        MeasureArg::HeatKernel => "heat-kernel",
    }
}

/// Rejects parameter flags the measure does not take, so a typo such as
/// `--beta` for Katz does not silently fall back to the default.
fn check_flags(a: &ComputeArgs) -> Result<()> {
    use MeasureArg::*;
    let takes_alpha = matches!(a.measure, Katz | ResolventSubgraph | Pagerank | HeatKernel);
    let takes_beta = matches!(a.measure, ExpSubgraph | TotalCommunicability);
    let takes_pref = matches!(a.measure, Katz | TotalCommunicability | Pagerank | HeatKernel);
    let name = measure_name(a.measure);
    if a.alpha.is_some() && !takes_alpha {
        return Err(usage(format!("--alpha does not apply to {name}")));
    }
    if a.beta.is_some() && !takes_beta {
        return Err(usage(format!("--beta does not apply to {name}")));
    }
    if a.t.is_some() && a.measure != HeatKernel {
        return Err(usage(format!("--t does not apply to {name}")));
    }
    if a.preference != "uniform" && !takes_pref {
        return Err(usage(format!("--preference does not apply to {name}")));
    }
    if !(a.tol > 0.0 && a.tol < 1.0) {
        return Err(usage(format!("--tol must lie in (0, 1), got {}", a.tol)));
    }
    Ok(())
}

/// 1-based competition rank: tied nodes share the best position of their group.
fn ranks(r: &Ranking64) -> Vec<usize> {
    let mut out = vec![0; r.len()];
    for g in &r.tie_groups {
        for &v in &r.order[g.clone()] {
            out[v] = g.start + 1;
        }
    }
    out
}

pub fn compute(a: &ComputeArgs) -> Result<ExitCode> {
    check_flags(a)?;
    let g = io::load_graph(&a.graph)?;
    let pref_vec = io::read_preference(&a.preference, &g)?;
    let pref = match &pref_vec {
        Some(v) => Preference::Custom(v.clone()),
        None => Preference::Uniform,
    };
    let s = side(a.side);
    let resolvent_alpha = || -> Result<f64> {
        Ok(match a.alpha {
            Some(x) => x,
            None => 0.85 / spectral_radius(&g, 1e-12)?,
        })
    };

    let (parameter, scores) = match a.measure {
        MeasureArg::Degree => (None, degree_centrality(&g, s).scores),
        MeasureArg::Eigenvector => (None, eigenvector_centrality(&g, s, a.tol)?.scores),
        MeasureArg::Katz => {
            let alpha = resolvent_alpha()?;
            (Some(alpha), katz(&g, alpha, &pref, s, a.tol)?.scores)
        }
        MeasureArg::ResolventSubgraph => {
            let alpha = resolvent_alpha()?;
            (Some(alpha), resolvent_subgraph(&g, alpha)?.scores)
        }
        MeasureArg::ExpSubgraph => {
            let beta = a.beta.unwrap_or(1.0);
            (Some(beta), exp_subgraph(&g, beta)?.scores)
        }
        MeasureArg::TotalCommunicability => {
            let beta = a.beta.unwrap_or(1.0);
            (Some(beta), total_communicability(&g, beta, &pref, s, a.tol)?.scores)
        }
        MeasureArg::HitsHub => (None, hits(&g, a.tol)?.0.scores),
        MeasureArg::HitsAuthority => (None, hits(&g, a.tol)?.1.scores),
        MeasureArg::Pagerank => {
            let alpha = a.alpha.unwrap_or(DEFAULT_ALPHA);
            let model = build_model(&g, alpha, pref_vec.as_deref())?;
            (Some(alpha), pagerank_power(&model, a.tol, DEFAULT_MAX_ITER)?)
        }
        MeasureArg::HeatKernel => {
            let alpha = a.alpha.unwrap_or(DEFAULT_ALPHA);
            let t = a.t.unwrap_or(1.0);
            if !(t > 0.0 && t.is_finite()) {
                return Err(usage(format!("--t must be positive, got {t}")));
            }
            let model = build_model(&g, alpha, pref_vec.as_deref())?;
            // normalized so the scores are comparable with PageRank
            let mut r = heat_kernel_rowsums(&model, t, a.tol)?;
            let total: f64 = r.iter().sum();
            r.iter_mut().for_each(|x| *x /= total);
            (Some(t), r)
        }
    };

    let r = rank(&scores, DEFAULT_TIE_TOL);
    let rk = ranks(&r);
    let labels = g.labels();
    let mut out = io::open_output(a.out.as_deref())?;
    if a.json {
        let nodes: Vec<_> = (0..scores.len())
            .map(|i| {
                let score: f64 = sig12(scores[i]).parse().expect("formatted float parses");
                json!({"node": labels[i], "score": score, "rank": rk[i]})
            })
            .collect();
        let doc = json!({
            "measure": measure_name(a.measure),
            "side": if g.is_directed() { format!("{:?}", s).to_lowercase() } else { "symmetric".into() },
            "parameter": parameter,
            "nodes": nodes,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["node", "score", "rank"])?;
        for i in 0..scores.len() {
            w.write_record([labels[i].to_string(), sig12(scores[i]), rk[i].to_string()])?;
        }
        w.flush()?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn sweep(a: &SweepArgs) -> Result<ExitCode> {
    let g = io::load_graph(&a.graph)?;
    let fam = family(a.measure);
    if a.normalized && !fam.is_resolvent() {
        return Err(usage("--normalized only applies to katz and resolvent-subgraph"));
    }
    let grid = match &a.grid {
        None if fam.is_resolvent() => resolvent_grid(&g, &fam.default_grid())?,
        None => fam.default_grid(),
        Some(v) if a.normalized => resolvent_grid(&g, v)?,
        Some(v) => v.clone(),
    };
    let k = match a.k {
        Some(k) => TopK::Top(k),
        None => TopK::All,
    };
    let result = limit_sweep(&g, fam, &grid, k, side(a.side))?;
    let report = convergence_report(&result, a.threshold);

    if a.json {
        let doc = json!({"sweep": result, "report": report});
        let mut out = io::open_output(a.out.as_deref())?;
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    match &a.out {
        Some(path) => {
            result.write_csv(io::open_output(Some(path))?)?;
            let rp = io::report_path(path);
            fs::write(&rp, serde_json::to_string_pretty(&report)? + "\n")
                .with_context(|| format!("cannot write {}", rp.display()))?;
        }
        None => {
            result.write_csv(std::io::stdout().lock())?;
            eprintln!("{}", report.recommendation);
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn compare(a: &CompareArgs) -> Result<ExitCode> {
    let xa = io::read_scores(&a.a)?;
    let xb = io::read_scores(&a.b)?;
    let keys = |rows: &[(u64, f64)], path: &std::path::Path| -> Result<BTreeSet<u64>> {
        let set: BTreeSet<u64> = rows.iter().map(|r| r.0).collect();
        if set.len() != rows.len() {
            return Err(usage(format!("{}: duplicate node ids", path.display())));
        }
        Ok(set)
    };
    let (ka, kb) = (keys(&xa, &a.a)?, keys(&xb, &a.b)?);
    if ka != kb {
        let only_a = ka.difference(&kb).count();
        let only_b = kb.difference(&ka).count();
        return Err(usage(format!(
            "node sets differ: {only_a} node(s) only in {}, {only_b} only in {}",
            a.a.display(),
            a.b.display()
        )));
    }
    if ka.is_empty() {
        return Err(usage("score files are empty"));
    }
    let index: HashMap<u64, usize> = ka.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let aligned = |rows: &[(u64, f64)]| {
        let mut v = vec![0.0; rows.len()];
        for &(l, s) in rows {
            v[index[&l]] = s;
        }
        v
    };
    let ra = rank(&aligned(&xa), DEFAULT_TIE_TOL);
    let rb = rank(&aligned(&xb), DEFAULT_TIE_TOL);
    let k = a.k.unwrap_or(ka.len());
    if k == 0 || k > ka.len() {
        return Err(usage(format!("--k must lie in [1, {}], got {k}", ka.len())));
    }
    let d = intersection_distance(&ra, &rb, k)?;
    if a.json {
        println!("{}", json!({"k": k, "n": ka.len(), "isim": d}));
    } else {
        println!("{}", sig12(d));
    }
    Ok(ExitCode::SUCCESS)
}

const DEMO_ALPHAS: [f64; 4] = [0.9, 0.1, 0.01, 0.001];
const DEMO_PRINTED: [[f64; 6]; 4] = [
    [0.03721, 0.05396, 0.04151, 0.37510, 0.20600, 0.28620],
    [0.15812, 0.16603, 0.16067, 0.17812, 0.16703, 0.17002],
    [0.16583, 0.16666, 0.16610, 0.16778, 0.16667, 0.16695],
    [0.1665833, 0.1666666, 0.1666111, 0.1667778, 0.1666667, 0.1666945],
];
const DEMO_DIGITS: [usize; 4] = [5, 5, 5, 7];
const DEMO_RANKING: [usize; 6] = [4, 6, 5, 2, 3, 1];

fn one_based(order: &[usize]) -> String {
    order.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Six-node example: H, p(α) on the reference grid, H1 and the rankings.
/// A printed value counts as matched when it is within one unit of its
/// last digit.
pub fn pagerank_demo() -> Result<ExitCode> {
    let g: Graph64 = fixtures::six_node();
    let mut divergent = Vec::new();

    let h = build_model(&g, 0.5, None)?.h_dense();
    println!("H =");
    for row in &h {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:8.5}")).collect();
        println!("  {}", cells.join(" "));
    }
    let (t, s) = (1.0 / 3.0, 0.5);
    let expected_h = [
        [0.0, 0.0, t, 0.0, 0.0, 0.0],
        [s, 0.0, t, 0.0, 0.0, 0.0],
        [s, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, s, 1.0],
        [0.0, 0.0, t, s, 0.0, 0.0],
        [0.0, 0.0, 0.0, s, s, 0.0],
    ];
    for (i, (row, want)) in h.iter().zip(&expected_h).enumerate() {
        for (j, (x, w)) in row.iter().zip(want).enumerate() {
            if (x - w).abs() > 1e-15 {
                divergent.push(format!("H[{},{}] = {x} (expected {w})", i + 1, j + 1));
            }
        }
    }
    println!();

    for ((alpha, printed), digits) in DEMO_ALPHAS.iter().zip(&DEMO_PRINTED).zip(DEMO_DIGITS) {
        let p = pagerank_power(&build_model(&g, *alpha, None)?, 1e-14, DEFAULT_MAX_ITER)?;
        let unit = 10f64.powi(-(digits as i32));
        let cells: Vec<String> = p.iter().map(|x| format!("{x:.digits$}")).collect();
        println!("p({alpha}) = ({})", cells.join(", "));
        for (i, (x, want)) in p.iter().zip(printed).enumerate() {
            if (x - want).abs() > unit {
                divergent.push(format!(
                    "p({alpha})[{}] = {x:.prec$} (reference {want:.digits$})",
                    i + 1,
                    prec = digits + 2
                ));
            }
        }
        let r = rank(&p, DEFAULT_TIE_TOL);
        println!("  ranking: {}", one_based(&r.order));
        let want: Vec<usize> = DEMO_RANKING.iter().map(|v| v - 1).collect();
        if r.order != want {
            divergent.push(format!("ranking at alpha = {alpha}: {}", one_based(&r.order)));
        }
    }
    println!();

    let h1 = small_alpha_limit(&g)?;
    let exact = [1.0 / 3.0, 5.0 / 6.0, 0.5, 1.5, 5.0 / 6.0, 1.0];
    let cells: Vec<String> = h1.iter().map(|x| sig12(*x)).collect();
    println!("H1 = ({})", cells.join(", "));
    for (i, (x, w)) in h1.iter().zip(&exact).enumerate() {
        if (x - w).abs() > 1e-12 {
            divergent.push(format!("H1[{}] = {x} (expected {w})", i + 1));
        }
    }
    let r = rank(&h1, DEFAULT_TIE_TOL);
    let groups: Vec<String> = r
        .tie_groups
        .iter()
        .map(|g| {
            let s = one_based(&r.order[g.clone()]);
            if g.len() > 1 { format!("{{{s}}}") } else { s }
        })
        .collect();
    println!("  ranking: {}", groups.join(" "));
    println!();

    if divergent.is_empty() {
        println!("all values match the reference digits");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} value(s) differ from the reference digits:", divergent.len());
        for d in &divergent {
            println!("  {d}");
        }
        Ok(ExitCode::FAILURE)
    }
}

pub fn generate(a: &GenerateArgs) -> Result<ExitCode> {
    let random = matches!(a.model, Model::ErdosRenyi | Model::Connected | Model::StronglyConnected);
    let seed = match (random, a.seed) {
        (true, None) => return Err(usage("--seed is required for random models")),
        (_, s) => s.unwrap_or(0),
    };
    if a.directed && matches!(a.model, Model::Connected | Model::Ring | Model::Star) {
        return Err(usage("--directed only applies to erdos-renyi (strongly-connected is always directed)"));
    }
    let g: Graph64 = match a.model {
        Model::ErdosRenyi => gen::erdos_renyi(a.n, a.p, a.directed, seed)?,
        Model::Connected => gen::connected_random(a.n, a.p, seed)?,
        Model::StronglyConnected => gen::strongly_connected_random(a.n, a.p, seed)?,
        Model::Ring => gen::ring(a.n)?,
        Model::Star => {
            if a.n < 2 {
                return Err(usage("a star needs at least 2 nodes"));
            }
            gen::star(a.n - 1)?
        }
    };
    let mut out = io::open_output(a.out.as_deref())?;
    out.write_all(g.to_edge_list(1).as_bytes())?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
