//! Weighted graph storage, ingestion and structural diagnostics.
//!
//! Node ids are dense and 0-based. The ids a graph was loaded with are kept
//! in [`Graph::labels`] so output can be reported in the caller's numbering.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Compressed sparse rows: row `i` holds `(column, weight)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Csr<T> {
    offsets: Vec<usize>,
    cols: Vec<usize>,
    weights: Vec<T>,
}

impl<T: Scalar> Csr<T> {
    fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, T)>) -> Self {
        triplets.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut offsets = vec![0usize; n + 1];
        for &(r, _, _) in &triplets {
            offsets[r + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let (cols, weights) = triplets.into_iter().map(|(_, c, w)| (c, w)).unzip();
        Self {
            offsets,
            cols,
            weights,
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, T)> + '_ {
        let range = self.offsets[i]..self.offsets[i + 1];
        self.cols[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    #[inline]
    pub fn row_len(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// `y = M x`.
    pub fn mul_vec(&self, x: &[T], y: &mut [T]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, w) in self.row(i) {
                acc += w * x[j];
            }
            *yi = acc;
        }
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.offsets.len() - 1)
            .map(|i| self.row(i).map(|(_, w)| w).sum())
            .collect()
    }
}

/// A single stored edge. Undirected graphs store each edge once with
/// `source <= target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T> {
    pub source: usize,
    pub target: usize,
    pub weight: T,
}

/// Immutable weighted graph with strictly positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph<T> {
    n: usize,
    directed: bool,
    edges: Vec<Edge<T>>,
    out: Csr<T>,
    inc: Csr<T>,
    labels: Vec<u64>,
}

/// Which adjacency sums to take: row sums (`Out`) or column sums (`In`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSide {
    Out,
    In,
}

#[derive(Debug, Clone, Copy)]
pub struct EdgeListOptions {
    pub directed: bool,
    /// When false, a third column is ignored and every edge has weight 1.
    pub weighted: bool,
    pub index_base: u64,
    pub allow_loops: bool,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        Self {
            directed: false,
            weighted: true,
            index_base: 1,
            allow_loops: false,
        }
    }
}

impl<T: Scalar> Graph<T> {
    /// Builds a graph from raw edges, collapsing duplicates by summing
    /// their weights. For undirected graphs `(u, v)` and `(v, u)` name the
    /// same edge.
    pub fn from_edges<I>(n: usize, edges: I, directed: bool, allow_loops: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut merged: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) references a node outside 0..{n}"
                )));
            }
            if !(w > T::zero()) || !w.is_finite() {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has weight {w}; weights must be finite and positive"
                )));
            }
            if u == v && !allow_loops {
                return Err(Error::Validation(format!(
                    "loop at node {u} but loops are not allowed"
                )));
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            *merged.entry(key).or_insert_with(T::zero) += w;
        }
        let edges: Vec<Edge<T>> = merged
            .into_iter()
            .map(|((source, target), weight)| Edge {
                source,
                target,
                weight,
            })
            .collect();
        Ok(Self::assemble(n, directed, edges, (0..n as u64).collect()))
    }

    fn assemble(n: usize, directed: bool, edges: Vec<Edge<T>>, labels: Vec<u64>) -> Self {
        let mut fwd = Vec::with_capacity(edges.len() * 2);
        for e in &edges {
            fwd.push((e.source, e.target, e.weight));
            if !directed && e.source != e.target {
                fwd.push((e.target, e.source, e.weight));
            }
        }
        let bwd = fwd.iter().map(|&(u, v, w)| (v, u, w)).collect();
        Self {
            n,
            directed,
            edges,
            out: Csr::from_triplets(n, fwd),
            inc: Csr::from_triplets(n, bwd),
            labels,
        }
    }

    /// Replaces the external node labels; `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Validation(format!(
                "{} labels supplied for {} nodes",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Row-major adjacency: row `i` lists `(j, a_ij)`.
    pub fn out_adjacency(&self) -> &Csr<T> {
        &self.out
    }

    /// Transposed adjacency: row `j` lists `(i, a_ij)`.
    pub fn in_adjacency(&self) -> &Csr<T> {
        &self.inc
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.source == e.target)
    }

    /// `a_ij`, zero when absent.
    pub fn weight(&self, i: usize, j: usize) -> T {
        self.out
            .row(i)
            .find(|&(c, _)| c == j)
            .map(|(_, w)| w)
            .unwrap_or_else(T::zero)
    }

    /// Dense row-major copy of the adjacency matrix.
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut a = vec![vec![T::zero(); self.n]; self.n];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, w) in self.out.row(i) {
                row[j] = w;
            }
        }
        a
    }

    /// Serializes as `u v w` lines, one per stored edge.
    pub fn to_edge_list(&self, index_base: u64) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!(
                "{} {} {}\n",
                e.source as u64 + index_base,
                e.target as u64 + index_base,
                e.weight
            ));
        }
        out
    }

    /// Every edge weight multiplied by `factor`.
    pub fn scaled(&self, factor: T) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|e| (e.source, e.target, e.weight * factor));
        Self::from_edges(self.n, edges, self.directed, true)?.with_labels(self.labels.clone())
    }

    /// Relabels node `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Validation("permutation length differs from n".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| (perm[e.source], perm[e.target], e.weight));
        Self::from_edges(self.n, edges, self.directed, true)
    }

    /// The same edges read as a directed graph (undirected edges become
    /// reciprocal pairs).
    pub fn as_directed(&self) -> Self {
        if self.directed {
            return self.clone();
        }
        let mut edges = Vec::with_capacity(self.out.nnz());
        for i in 0..self.n {
            for (j, w) in self.out.row(i) {
                edges.push(Edge {
                    source: i,
                    target: j,
                    weight: w,
                });
            }
        }
        Self::assemble(self.n, true, edges, self.labels.clone())
    }

    /// Subgraph induced by `nodes` (in the given order); node `k` of the
    /// result is `nodes[k]` of `self`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Self {
        let mut position = vec![usize::MAX; self.n];
        for (k, &v) in nodes.iter().enumerate() {
            position[v] = k;
        }
        let mut edges: Vec<Edge<T>> = self
            .edges
            .iter()
            .filter(|e| position[e.source] != usize::MAX && position[e.target] != usize::MAX)
            .map(|e| {
                let (mut s, mut t) = (position[e.source], position[e.target]);
                if !self.directed && s > t {
                    std::mem::swap(&mut s, &mut t);
                }
                Edge {
                    source: s,
                    target: t,
                    weight: e.weight,
                }
            })
            .collect();
        edges.sort_by(|a, b| (a.source, a.target).cmp(&(b.source, b.target)));
        let labels = nodes.iter().map(|&v| self.labels[v]).collect();
        Self::assemble(nodes.len(), self.directed, edges, labels)
    }

    pub fn degrees(&self, side: DegreeSide) -> Vec<T> {
        match side {
            DegreeSide::Out => self.out.row_sums(),
            DegreeSide::In => self.inc.row_sums(),
        }
    }

    /// Strongly connected components (connected components when
    /// undirected), each sorted ascending, listed by smallest member.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut comps = tarjan(self.n, |v| self.out.row(v).map(|(w, _)| w));
        for c in comps.iter_mut() {
            c.sort_unstable();
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n > 0 && self.strongly_connected_components().len() == 1
    }

    /// Largest strongly connected component and the map from its node ids
    /// to ids of `self`. Ties go to the component holding the smallest id.
    pub fn largest_scc(&self) -> Result<(Self, Vec<usize>)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let comps = self.strongly_connected_components();
        // components are ordered by smallest member, so the first maximum wins ties
        let best = comps
            .iter()
            .fold(&comps[0], |best, c| if c.len() > best.len() { c } else { best });
        Ok((self.induced_subgraph(best), best.clone()))
    }

    /// Per-node `[A^3]_ii / 2`: the triangle count for unweighted graphs and
    /// the weighted closed 3-walk value otherwise.
    pub fn triangle_counts(&self) -> Result<Vec<T>> {
        if self.directed {
            return Err(Error::Unsupported(
                "triangle counts require an undirected graph".into(),
            ));
        }
        let mut marker = vec![T::zero(); self.n];
        let half = T::lit(0.5);
        let mut out = vec![T::zero(); self.n];
        for i in 0..self.n {
            for (k, w) in self.out.row(i) {
                marker[k] = w;
            }
            let mut acc = T::zero();
            for (j, a_ij) in self.out.row(i) {
                for (k, a_jk) in self.out.row(j) {
                    acc += a_ij * a_jk * marker[k];
                }
            }
            for (k, _) in self.out.row(i) {
                marker[k] = T::zero();
            }
            out[i] = acc * half;
        }
        Ok(out)
    }

    /// Local clustering coefficients `2Δ_i / (d_i(d_i - 1))` on the
    /// unweighted, loop-free structure. Nodes of degree < 2 are `None` and
    /// are left out of the average.
    pub fn clustering_coefficient(&self) -> Result<Clustering<T>> {
        if self.directed {
            return Err(Error::Unsupported(
                "clustering coefficient requires an undirected graph".into(),
            ));
        }
        let mut simple = Vec::new();
        for e in &self.edges {
            if e.source != e.target {
                simple.push((e.source, e.target, T::one()));
            }
        }
        let skeleton = Self::from_edges(self.n, simple, false, false)?;
        let tri = skeleton.triangle_counts()?;
        let deg = skeleton.degrees(DegreeSide::Out);
        let two = T::lit(2.0);
        let per_node: Vec<Option<T>> = tri
            .iter()
            .zip(&deg)
            .map(|(&t, &d)| (d >= two).then(|| two * t / (d * (d - T::one()))))
            .collect();
        let defined: Vec<T> = per_node.iter().flatten().copied().collect();
        let average = (!defined.is_empty())
            .then(|| defined.iter().copied().sum::<T>() / T::from_usize_lossy(defined.len()));
        Ok(Clustering { per_node, average })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Clustering<T> {
    pub per_node: Vec<Option<T>>,
    pub average: Option<T>,
}

/// Iterative Tarjan; returns components in reverse topological order.
fn tarjan<I, F>(n: usize, successors: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0usize;
    let succ: Vec<Vec<usize>> = (0..n).map(|v| successors(v).collect()).collect();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        // (node, next successor position)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let w = succ[v][top.1];
                top.1 += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

/// Parses a whitespace-separated edge list. Blank lines and lines starting
/// with `#` or `%` are skipped.
pub fn load_edge_list<T: Scalar>(text: &str, opts: EdgeListOptions) -> Result<Graph<T>> {
    let mut raw = Vec::new();
    let mut max_id: Option<u64> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v` or `u v w`, found {} fields", fields.len()),
            });
        }
        let parse_id = |s: &str| -> Result<usize> {
            let id: u64 = s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid node id `{s}`"),
            })?;
            if id < opts.index_base {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("node id {id} below index base {}", opts.index_base),
                });
            }
            Ok((id - opts.index_base) as usize)
        };
        let u = parse_id(fields[0])?;
        let v = parse_id(fields[1])?;
        let w = if opts.weighted && fields.len() == 3 {
            let w: f64 = fields[2].parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid weight `{}`", fields[2]),
            })?;
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::Validation(format!(
                    "line {line_no}: weight {w} is not positive"
                )));
            }
            w
        } else {
            1.0
        };
        if u == v && !opts.allow_loops {
            return Err(Error::Validation(format!(
                "line {line_no}: loop at node {} but loops are not allowed",
                u as u64 + opts.index_base
            )));
        }
        max_id = Some(max_id.map_or(u as u64, |m| m.max(u as u64)).max(v as u64));
        raw.push((u, v, T::lit(w)));
    }
    let n = max_id.map_or(0, |m| m as usize + 1);
    let labels = (0..n as u64).map(|i| i + opts.index_base).collect();
    Graph::from_edges(n, raw, opts.directed, opts.allow_loops)?.with_labels(labels)
}

/// Parses the MatrixMarket `coordinate` subset with `pattern`, `real` or
/// `integer` values and `general` or `symmetric` storage. Symmetric files
/// give undirected graphs; explicit zeros are dropped; diagonal entries
/// become loops.
pub fn load_matrix_market<T: Scalar>(text: &str) -> Result<Graph<T>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Format("empty MatrixMarket input".into()))?;
    let tokens: Vec<String> = header
        .split_whitespace()
        .map(|s| s.to_ascii_lowercase())
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(Error::Format(format!("bad MatrixMarket header `{header}`")));
    }
    if tokens[2] != "coordinate" {
        return Err(Error::Format(format!("`{}` storage is not supported", tokens[2])));
    }
    let pattern = match tokens[3].as_str() {
        "pattern" => true,
        "real" | "integer" => false,
        other => return Err(Error::Format(format!("`{other}` field is not supported"))),
    };
    let directed = match tokens[4].as_str() {
        "general" => true,
        "symmetric" => false,
        other => return Err(Error::Format(format!("`{other}` symmetry is not supported"))),
    };

    let mut size: Option<(usize, usize)> = None;
    let mut raw = Vec::new();
    for (lineno, line) in lines {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_usize = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid integer `{s}`"),
            })
        };
        let Some((rows, _)) = size else {
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "size line must be `rows cols nnz`".into(),
                });
            }
            let (r, c) = (parse_usize(fields[0])?, parse_usize(fields[1])?);
            if r != c {
                return Err(Error::Format(format!("matrix is {r}x{c}, not square")));
            }
            size = Some((r, c));
            continue;
        };
        let expected = if pattern { 2 } else { 3 };
        if fields.len() != expected {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {expected} fields, found {}", fields.len()),
            });
        }
        let (i, j) = (parse_usize(fields[0])?, parse_usize(fields[1])?);
        if i == 0 || j == 0 || i > rows || j > rows {
            return Err(Error::Parse {
                line: line_no,
                message: format!("entry ({i}, {j}) outside 1..={rows}"),
            });
        }
        let w = if pattern {
            1.0
        } else {
            fields[2].parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid value `{}`", fields[2]),
            })?
        };
        if w == 0.0 {
            continue;
        }
        if !(w > 0.0) || !w.is_finite() {
            return Err(Error::Validation(format!(
                "line {line_no}: value {w} is not a positive weight"
            )));
        }
        raw.push((i - 1, j - 1, T::lit(w)));
    }
    let (n, _) = size.ok_or_else(|| Error::Format("missing size line".into()))?;
    let labels = (1..=n as u64).collect();
    Graph::from_edges(n, raw, directed, true)?.with_labels(labels)
}
