use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use walkcent::graph::{load_edge_list, load_matrix_market};
use walkcent::{EdgeListOptions, Graph64};

use crate::{Format, GraphArgs};

/// Bad command-line input that the library never sees (exit status 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub fn load_graph(args: &GraphArgs) -> Result<Graph64> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let g = match args.format {
        Format::Edgelist => load_edge_list(
            &text,
            EdgeListOptions {
                directed: args.directed,
                weighted: true,
                index_base: args.index_base,
                allow_loops: args.allow_loops,
            },
        )?,
        Format::Mtx => load_matrix_market(&text)?,
    };
    Ok(g)
}

/// `uniform`, or a file holding one value per node: either one number per
/// line in node order, or `node value` pairs keyed by node label.
pub fn read_preference(source: &str, g: &Graph64) -> Result<Option<Vec<f64>>> {
    if source == "uniform" {
        return Ok(None);
    }
    let text = fs::read_to_string(source).with_context(|| format!("cannot read preference file {source}"))?;
    let index: HashMap<u64, usize> = g.labels().iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let n = g.node_count();
    let mut plain = Vec::new();
    let mut keyed = vec![None; n];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
        let bad = || usage(format!("{source}:{}: expected `value` or `node value`", lineno + 1));
        match fields.as_slice() {
            [v] => plain.push(v.parse::<f64>().map_err(|_| bad())?),
            [node, v] => {
                let label: u64 = node.parse().map_err(|_| bad())?;
                let &i = index
                    .get(&label)
                    .ok_or_else(|| usage(format!("{source}:{}: unknown node {label}", lineno + 1)))?;
                keyed[i] = Some(v.parse::<f64>().map_err(|_| bad())?);
            }
            _ => return Err(bad()),
        }
    }
    let values = if plain.is_empty() {
        keyed
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| usage(format!("{source}: no value for node {}", g.labels()[i]))))
            .collect::<Result<Vec<_>>>()?
    } else if keyed.iter().all(Option::is_none) {
        plain
    } else {
        bail!(usage(format!("{source}: mixes plain and keyed lines")));
    };
    if values.len() != n {
        bail!(usage(format!("{source}: {} values for {n} nodes", values.len())));
    }
    Ok(Some(values))
}

/// Twelve significant digits, fixed notation where that stays readable.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

pub fn open_output(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(std::io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

pub fn report_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".report.json");
    PathBuf::from(s)
}

/// Reads a score file with `node` and `score` columns.
pub fn read_scores(path: &Path) -> Result<Vec<(u64, f64)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let headers = rdr.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| usage(format!("{}: missing `{name}` column", path.display())))
    };
    let (node, score) = (col("node")?, col("score")?);
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let bad = || usage(format!("{}: malformed row {}", path.display(), i + 2));
        let id: u64 = rec.get(node).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let s: f64 = rec.get(score).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        rows.push((id, s));
    }
    Ok(rows)
}
