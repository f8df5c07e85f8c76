//! Rankings, the top-k intersection distance, and parameter sweeps that
//! track how a parameterized measure moves between the degree ranking and
//! the eigenvector ranking.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write;
use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::centrality::{
    degree_centrality, eigenvector_centrality, exp_subgraph, katz, resolvent_subgraph,
    total_communicability, Preference, Side,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pagerank::{build_model, pagerank_power, small_alpha_limit, MAX_ALPHA};
use crate::scalar::Scalar;
use crate::spectral::{spectral_radius, DEFAULT_MAX_ITER};

pub const DEFAULT_TIE_TOL: f64 = 1e-9;
pub const DEFAULT_BAND_THRESHOLD: f64 = 0.05;

/// Nodes ordered by descending score. Scores within `tie_tol` (relative)
/// of the first score of a run form a tie group and are listed by
/// ascending node id.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking<T> {
    pub order: Vec<usize>,
    pub scores: Vec<T>,
    /// Ranges of positions in `order`; together they partition `0..n`.
    pub tie_groups: Vec<Range<usize>>,
}

pub fn rank<T: Scalar>(scores: &[T], tie_tol: T) -> Ranking<T> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut tie_groups = Vec::new();
    let mut start = 0;
    for pos in 1..=order.len() {
        let split = pos == order.len() || {
            let lead = scores[order[start]];
            let cur = scores[order[pos]];
            (lead - cur).abs() > tie_tol * lead.abs().max(cur.abs())
        };
        if split {
            order[start..pos].sort_unstable();
            tie_groups.push(start..pos);
            start = pos;
        }
    }
    Ranking {
        order,
        scores: scores.to_vec(),
        tie_groups,
    }
}

impl<T: Scalar> Ranking<T> {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[node]` is the 0-based rank of `node`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Number of node pairs ranked strictly apart by `self` (different tie
    /// groups) that `other` puts in the opposite order. Zero means `other`
    /// equals `self` up to the order inside `self`'s tie groups.
    pub fn discordant_pairs(&self, other: &Ranking<T>) -> usize {
        let pos = other.positions();
        let mut bad = 0;
        for (gi, g) in self.tie_groups.iter().enumerate() {
            for later in &self.tie_groups[gi + 1..] {
                for &a in &self.order[g.clone()] {
                    for &b in &self.order[later.clone()] {
                        if pos[a] > pos[b] {
                            bad += 1;
                        }
                    }
                }
            }
        }
        bad
    }

    /// True when `other` orders every pair `self` separates the same way.
    pub fn agrees_modulo_ties(&self, other: &Ranking<T>) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let pos = other.positions();
        let mut prev_max: Option<usize> = None;
        for g in &self.tie_groups {
            let members = &self.order[g.clone()];
            let lo = members.iter().map(|&v| pos[v]).min().unwrap_or(0);
            let hi = members.iter().map(|&v| pos[v]).max().unwrap_or(0);
            if prev_max.is_some_and(|m| m > lo) {
                return false;
            }
            prev_max = Some(hi);
        }
        true
    }
}

/// Top-`k` intersection distance:
/// `(1/k) Σ_{i=1..k} |X_i Δ Y_i| / (2i)` where `X_i`, `Y_i` are the top-`i`
/// node sets of the two rankings.
pub fn intersection_distance<T: Scalar>(x: &Ranking<T>, y: &Ranking<T>, k: usize) -> Result<f64> {
    isim_orders(&x.order, &y.order, k)
}

pub(crate) fn isim_orders(x: &[usize], y: &[usize], k: usize) -> Result<f64> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::Mismatch(format!(
            "rankings have {n} and {} nodes",
            y.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in x {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Mismatch("first ranking is not a permutation".into()));
        }
    }
    let mut seen = vec![false; n];
    for &v in y {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Mismatch("second ranking is not a permutation".into()));
        }
    }
    if k == 0 || k > n {
        return Err(Error::Validation(format!("k must lie in 1..={n}, got {k}")));
    }
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n];
    let mut common = 0usize;
    let mut total = 0.0f64;
    for i in 0..k {
        in_x[x[i]] = true;
        if in_y[x[i]] {
            common += 1;
        }
        in_y[y[i]] = true;
        if in_x[y[i]] {
            common += 1;
        }
        let size = i + 1;
        let sym_diff = 2 * (size - common);
        total += sym_diff as f64 / (2 * size) as f64;
    }
    Ok(total / k as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFamily {
    ExpSubgraph,
    TotalCommunicability,
    ResolventSubgraph,
    Katz,
    PageRank,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::ExpSubgraph => "exp-subgraph",
            SweepFamily::TotalCommunicability => "total-communicability",
            SweepFamily::ResolventSubgraph => "resolvent-subgraph",
            SweepFamily::Katz => "katz",
            SweepFamily::PageRank => "pagerank",
        }
    }

    /// Resolvent families are parameterized by `α`, reported as `τ = αλ₁`.
    pub fn is_resolvent(self) -> bool {
        matches!(self, SweepFamily::ResolventSubgraph | SweepFamily::Katz)
    }

    /// Default grid: `β` values for the exponential families, `τ` values
    /// (multiples of `1/λ₁`) for the resolvent families, `α` for PageRank.
    pub fn default_grid(self) -> Vec<f64> {
        match self {
            SweepFamily::ExpSubgraph | SweepFamily::TotalCommunicability => {
                vec![0.1, 0.5, 1.0, 2.0, 5.0, 8.0, 10.0]
            }
            SweepFamily::ResolventSubgraph | SweepFamily::Katz => {
                vec![0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99]
            }
            SweepFamily::PageRank => vec![0.001, 0.01, 0.1, 0.5, 0.85, 0.9, 0.99],
        }
    }
}

impl fmt::Display for SweepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How many leading positions the intersection distance looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TopK {
    #[default]
    All,
    Top(usize),
}

impl TopK {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            TopK::All => n,
            TopK::Top(k) => k.min(n),
        }
    }
}

impl Serialize for TopK {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TopK::All => s.serialize_str("all"),
            TopK::Top(k) => s.serialize_u64(*k as u64),
        }
    }
}

impl<'de> Deserialize<'de> for TopK {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(TopK::Top(k)),
            Raw::Str(s) if s == "all" => Ok(TopK::All),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("invalid k `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub measure: SweepFamily,
    pub side: String,
    /// Parameters as evaluated (`β`, `α`).
    pub grid: Vec<f64>,
    /// `τ = αλ₁` for resolvent families, otherwise equal to `grid`.
    pub normalized_grid: Vec<f64>,
    pub lambda1: Option<f64>,
    pub isim_to_degree: Vec<f64>,
    /// Absent for PageRank on graphs that are not strongly connected.
    pub isim_to_eigenvector: Option<Vec<f64>>,
    /// Between grid points `i` and `i + 1`.
    pub isim_successive: Vec<f64>,
    pub k: TopK,
}

impl SweepResult {
    /// CSV with columns `parameter, isim_degree, isim_eigenvector,
    /// isim_successive`; the successive distance is attached to the later
    /// grid point and left empty on the first row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(["parameter", "isim_degree", "isim_eigenvector", "isim_successive"])
            .map_err(csv_err)?;
        for (i, p) in self.grid.iter().enumerate() {
            let eig = self
                .isim_to_eigenvector
                .as_ref()
                .map(|v| v[i].to_string())
                .unwrap_or_default();
            let succ = if i == 0 {
                String::new()
            } else {
                self.isim_successive[i - 1].to_string()
            };
            w.write_record([
                p.to_string(),
                self.isim_to_degree[i].to_string(),
                eig,
                succ,
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep result serializes")
    }
}

/// Computes the family's scores at one parameter value.
pub fn family_scores<T: Scalar>(
    g: &Graph<T>,
    family: SweepFamily,
    parameter: T,
    side: Side,
    tol: T,
) -> Result<Vec<T>> {
    let pref = Preference::Uniform;
    let scores = match family {
        SweepFamily::ExpSubgraph => exp_subgraph(g, parameter)?.scores,
        SweepFamily::ResolventSubgraph => resolvent_subgraph(g, parameter)?.scores,
        SweepFamily::TotalCommunicability => {
            total_communicability(g, parameter, &pref, side, tol)?.scores
        }
        SweepFamily::Katz => katz(g, parameter, &pref, side, tol)?.scores,
        SweepFamily::PageRank => {
            let model = build_model(g, parameter, None)?;
            pagerank_power(&model, tol, DEFAULT_MAX_ITER)?
        }
    };
    Ok(scores)
}

/// Evaluates `family` over `grid` and compares each ranking with the
/// degree ranking (out-degree for broadcast, in-degree for receive, `H1`
/// for PageRank), the eigenvector ranking (`q₁`, `x₁` or `y₁`), and the
/// ranking at the previous grid point.
///
/// For resolvent families the grid holds `α` values, which must lie in
/// `(0, 1/λ₁)`. Grid points are evaluated concurrently; the result does
/// not depend on evaluation order.
pub fn limit_sweep<T: Scalar>(
    g: &Graph<T>,
    family: SweepFamily,
    grid: &[T],
    k: TopK,
    side: Side,
) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::Validation("parameter grid is empty".into()));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Validation("parameter grid must be strictly increasing".into()));
    }
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let depth = k.resolve(n);
    if depth == 0 {
        return Err(Error::Validation("k must be at least 1".into()));
    }
    let tol = T::default_tol();
    let tie_tol = T::lit(DEFAULT_TIE_TOL);

    let lambda1 = if family.is_resolvent() {
        Some(spectral_radius(g, tol)?)
    } else {
        None
    };
    for &p in grid {
        check_grid_point(family, p, lambda1)?;
    }

    let side = if g.is_directed() { side } else { Side::Symmetric };
    let degree_scores = if family == SweepFamily::PageRank {
        small_alpha_limit(g)?
    } else {
        degree_centrality(g, side).scores
    };
    let eig_side = if family == SweepFamily::PageRank {
        Side::Receive
    } else {
        side
    };
    let eigen_scores = match eigenvector_centrality(g, eig_side, tol) {
        Ok(cv) => Some(cv.scores),
        Err(Error::Disconnected(_)) if family == SweepFamily::PageRank => None,
        Err(e) => return Err(e),
    };
    let degree_rank = rank(&degree_scores, tie_tol);
    let eigen_rank = eigen_scores.map(|s| rank(&s, tie_tol));

    let rankings: Vec<Result<Ranking<T>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = grid
            .iter()
            .map(|&p| {
                scope.spawn(move || {
                    family_scores(g, family, p, side, tol).map(|s| rank(&s, tie_tol))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let rankings = rankings.into_iter().collect::<Result<Vec<_>>>()?;

    let isim_to_degree = rankings
        .iter()
        .map(|r| intersection_distance(r, &degree_rank, depth))
        .collect::<Result<Vec<_>>>()?;
    let isim_to_eigenvector = eigen_rank
        .as_ref()
        .map(|e| {
            rankings
                .iter()
                .map(|r| intersection_distance(r, e, depth))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let isim_successive = rankings
        .windows(2)
        .map(|w| intersection_distance(&w[0], &w[1], depth))
        .collect::<Result<Vec<_>>>()?;

    let grid_f: Vec<f64> = grid.iter().map(|p| p.as_f64()).collect();
    let lambda1_f = lambda1.map(|l| l.as_f64());
    let normalized_grid = match lambda1_f {
        Some(l) => grid_f.iter().map(|p| p * l).collect(),
        None => grid_f.clone(),
    };
    Ok(SweepResult {
        measure: family,
        side: format!("{side:?}").to_lowercase(),
        grid: grid_f,
        normalized_grid,
        lambda1: lambda1_f,
        isim_to_degree,
        isim_to_eigenvector,
        isim_successive,
        k,
    })
}

/// Turns a grid of `τ` multiples into `α = τ/λ₁`.
pub fn resolvent_grid<T: Scalar>(g: &Graph<T>, taus: &[f64]) -> Result<Vec<T>> {
    let lambda1 = spectral_radius(g, T::default_tol())?;
    Ok(taus.iter().map(|t| T::lit(*t) / lambda1).collect())
}

fn check_grid_point<T: Scalar>(family: SweepFamily, p: T, lambda1: Option<T>) -> Result<()> {
    if !(p > T::zero()) || !p.is_finite() {
        return Err(Error::Domain(format!(
            "grid point {p} is outside the feasible interval (0, t*)"
        )));
    }
    match family {
        SweepFamily::ResolventSubgraph | SweepFamily::Katz => {
            let l = lambda1.expect("lambda1 computed for resolvent families");
            crate::matfunc::check_resolvent_alpha(p, l).map_err(|_| {
                Error::Domain(format!(
                    "grid point {p} is outside the feasible interval (0, t*) with t* = 1/lambda1 = {}",
                    T::one() / l
                ))
            })
        }
        SweepFamily::PageRank if p > T::lit(MAX_ALPHA) => Err(Error::Domain(format!(
            "grid point {p} is outside (0, {MAX_ALPHA}]"
        ))),
        _ => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub measure: SweepFamily,
    pub threshold: f64,
    /// Grid sub-interval (parameter units) where the ranking is more than
    /// `threshold` away from both references.
    pub band: Option<(f64, f64)>,
    /// The same band in normalized units (`τ` for resolvent families).
    pub normalized_band: Option<(f64, f64)>,
    /// Indices `i` where `isim_to_degree[i + 1] < isim_to_degree[i]`.
    pub degree_violations: Vec<usize>,
    /// Indices `i` where `isim_to_eigenvector[i + 1] > isim_to_eigenvector[i]`.
    pub eigenvector_violations: Vec<usize>,
    pub recommendation: String,
}

pub fn convergence_report(s: &SweepResult, threshold: f64) -> ConvergenceReport {
    let mut report = ConvergenceReport {
        measure: s.measure,
        threshold,
        band: None,
        normalized_band: None,
        degree_violations: Vec::new(),
        eigenvector_violations: Vec::new(),
        recommendation: String::new(),
    };
    let unit = if s.measure.is_resolvent() {
        "tau = alpha*lambda1"
    } else if s.measure == SweepFamily::PageRank {
        "alpha"
    } else {
        "beta"
    };
    if s.grid.len() < 2 {
        report.recommendation =
            "single grid point: no band or monotonicity can be assessed".to_string();
        return report;
    }
    const SLACK: f64 = 1e-12;
    report.degree_violations = s
        .isim_to_degree
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] < w[0] - SLACK)
        .map(|(i, _)| i)
        .collect();
    if let Some(eig) = &s.isim_to_eigenvector {
        report.eigenvector_violations = eig
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0] + SLACK)
            .map(|(i, _)| i)
            .collect();
    }
    let informative: Vec<usize> = (0..s.grid.len())
        .filter(|&i| {
            s.isim_to_degree[i] > threshold
                && s
                    .isim_to_eigenvector
                    .as_ref()
                    .is_none_or(|e| e[i] > threshold)
        })
        .collect();
    if let (Some(&lo), Some(&hi)) = (informative.first(), informative.last()) {
        report.band = Some((s.grid[lo], s.grid[hi]));
        report.normalized_band = Some((s.normalized_grid[lo], s.normalized_grid[hi]));
    }
    report.recommendation = match report.normalized_band {
        Some((lo, hi)) => format!(
            "choose {unit} in [{lo}, {hi}]: there the {} ranking differs from both the degree and the eigenvector rankings by more than {threshold}; below it the ranking tracks degree, above it the dominant eigenvector",
            s.measure
        ),
        None => format!(
            "no {unit} on the grid separates the {} ranking from both references by more than {threshold}; the measure adds little beyond degree or eigenvector centrality here",
            s.measure
        ),
    };
    if !report.degree_violations.is_empty() || !report.eigenvector_violations.is_empty() {
        report
            .recommendation
            .push_str("; convergence is not monotone on this grid");
    }
    report
}
