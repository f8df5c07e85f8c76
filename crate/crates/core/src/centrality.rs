//! The centrality measure catalogue.
//!
//! Row-sum measures (Katz, total communicability) and eigenvector
//! centrality come in a broadcast variant built from `A` and a receive
//! variant built from `Aᵀ`. On undirected graphs the two coincide and the
//! result is tagged [`Side::Symmetric`]. Diagonal measures (resolvent and
//! exponential subgraph centrality) are only offered for undirected graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DegreeSide, Graph};
use crate::matfunc::{exp_action_op, fa_diagonal, resolvent_impl, SeriesFunction};
use crate::operator::{Adjacency, LinearOperator};
use crate::scalar::{dot, norm2, Scalar};
use crate::spectral::{dominant_eigenpair, EigenSide, DEFAULT_MAX_ITER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Degree,
    Eigenvector,
    Katz,
    ResolventSubgraph,
    ExpSubgraph,
    TotalCommunicability,
    HitsHub,
    HitsAuthority,
    PageRank,
    HeatKernel,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Eigenvector => "eigenvector",
            Measure::Katz => "katz",
            Measure::ResolventSubgraph => "resolvent-subgraph",
            Measure::ExpSubgraph => "exp-subgraph",
            Measure::TotalCommunicability => "total-communicability",
            Measure::HitsHub => "hits-hub",
            Measure::HitsAuthority => "hits-authority",
            Measure::PageRank => "pagerank",
            Measure::HeatKernel => "heat-kernel",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Broadcast (hub, `A`) or receive (authority, `Aᵀ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Broadcast,
    Receive,
    Symmetric,
}

impl Side {
    fn resolve<T: Scalar>(self, g: &Graph<T>) -> Side {
        if g.is_directed() {
            match self {
                Side::Symmetric => Side::Broadcast,
                s => s,
            }
        } else {
            Side::Symmetric
        }
    }

    fn transpose(self) -> bool {
        self == Side::Receive
    }
}

/// Preference (personalization) vector applied to row-sum measures.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Preference<T> {
    #[default]
    Uniform,
    Custom(Vec<T>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreferenceKind {
    Uniform,
    Custom,
}

impl<T: Scalar> Preference<T> {
    /// The vector itself; custom vectors must be entrywise positive.
    pub fn materialize(&self, n: usize) -> Result<Vec<T>> {
        match self {
            Preference::Uniform => Ok(vec![T::one(); n]),
            Preference::Custom(v) => {
                if v.len() != n {
                    return Err(Error::Validation(format!(
                        "preference has length {}, graph has {n} nodes",
                        v.len()
                    )));
                }
                if let Some(bad) = v.iter().position(|x| !(*x > T::zero()) || !x.is_finite()) {
                    return Err(Error::Validation(format!(
                        "preference entry {bad} is {}; entries must be positive",
                        v[bad]
                    )));
                }
                Ok(v.clone())
            }
        }
    }

    pub fn kind(&self) -> PreferenceKind {
        match self {
            Preference::Uniform => PreferenceKind::Uniform,
            Preference::Custom(_) => PreferenceKind::Custom,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolverMeta {
    pub tol: Option<f64>,
    pub iterations: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector<T> {
    pub measure: Measure,
    pub side: Side,
    /// The parameter exactly as requested.
    pub parameter: Option<T>,
    pub preference: PreferenceKind,
    pub scores: Vec<T>,
    pub meta: SolverMeta,
}

impl<T> CentralityVector<T> {
    fn new(measure: Measure, side: Side, parameter: Option<T>, scores: Vec<T>) -> Self {
        Self {
            measure,
            side,
            parameter,
            preference: PreferenceKind::Uniform,
            scores,
            meta: SolverMeta::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Weighted out-degree (broadcast) or in-degree (receive).
pub fn degree_centrality<T: Scalar>(g: &Graph<T>, side: Side) -> CentralityVector<T> {
    let side = side.resolve(g);
    let deg_side = if side.transpose() {
        DegreeSide::In
    } else {
        DegreeSide::Out
    };
    CentralityVector::new(Measure::Degree, side, None, g.degrees(deg_side))
}

/// Dominant right (broadcast) or left (receive) eigenvector, unit 2-norm.
pub fn eigenvector_centrality<T: Scalar>(
    g: &Graph<T>,
    side: Side,
    tol: T,
) -> Result<CentralityVector<T>> {
    let side = side.resolve(g);
    let eig_side = if side.transpose() {
        EigenSide::Left
    } else {
        EigenSide::Right
    };
    let info = dominant_eigenpair(g, eig_side, tol, DEFAULT_MAX_ITER)?;
    let mut cv = CentralityVector::new(Measure::Eigenvector, side, None, info.dominant_vector);
    cv.meta = SolverMeta {
        tol: Some(tol.as_f64()),
        iterations: Some(info.iterations),
    };
    Ok(cv)
}

/// `K(α) = (I − αA)⁻¹ v` (broadcast) or `(I − αAᵀ)⁻¹ v` (receive).
pub fn katz<T: Scalar>(
    g: &Graph<T>,
    alpha: T,
    preference: &Preference<T>,
    side: Side,
    tol: T,
) -> Result<CentralityVector<T>> {
    let side = side.resolve(g);
    let v = preference.materialize(g.node_count())?;
    let scores = resolvent_impl(alpha, g, side.transpose(), &v, tol)?;
    let mut cv = CentralityVector::new(Measure::Katz, side, Some(alpha), scores);
    cv.preference = preference.kind();
    cv.meta.tol = Some(tol.as_f64());
    Ok(cv)
}

/// `RC_i(α) = [(I − αA)⁻¹]_ii`.
pub fn resolvent_subgraph<T: Scalar>(g: &Graph<T>, alpha: T) -> Result<CentralityVector<T>> {
    let scores = fa_diagonal(&SeriesFunction::resolvent(), alpha, g)?;
    Ok(CentralityVector::new(
        Measure::ResolventSubgraph,
        Side::Symmetric,
        Some(alpha),
        scores,
    ))
}

/// `SC_i(β) = [e^{βA}]_ii`.
pub fn exp_subgraph<T: Scalar>(g: &Graph<T>, beta: T) -> Result<CentralityVector<T>> {
    if !(beta > T::zero()) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let scores = fa_diagonal(&SeriesFunction::exponential(), beta, g)?;
    Ok(CentralityVector::new(
        Measure::ExpSubgraph,
        Side::Symmetric,
        Some(beta),
        scores,
    ))
}

/// `TC(β) = e^{βA} v` (broadcast) or `e^{βAᵀ} v` (receive).
pub fn total_communicability<T: Scalar>(
    g: &Graph<T>,
    beta: T,
    preference: &Preference<T>,
    side: Side,
    tol: T,
) -> Result<CentralityVector<T>> {
    if !(beta > T::zero()) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let side = side.resolve(g);
    let v = preference.materialize(g.node_count())?;
    let scores = if side.transpose() {
        exp_action_op(beta, &Adjacency::transposed(g), &v, tol)?
    } else {
        exp_action_op(beta, &Adjacency::new(g), &v, tol)?
    };
    let mut cv = CentralityVector::new(Measure::TotalCommunicability, side, Some(beta), scores);
    cv.preference = preference.kind();
    cv.meta.tol = Some(tol.as_f64());
    Ok(cv)
}

/// HITS hub and authority vectors: dominant eigenvectors of `AAᵀ` and
/// `AᵀA`, by alternating power iteration with 2-norm normalization at each
/// half step. Converged when the Rayleigh quotient residual of `AAᵀ` on the
/// hub vector is at most `tol` relative.
pub fn hits<T: Scalar>(
    g: &Graph<T>,
    tol: T,
) -> Result<(CentralityVector<T>, CentralityVector<T>)> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let a = Adjacency::new(g);
    let at = Adjacency::transposed(g);
    let mut hub = vec![T::one() / T::from_usize_lossy(n).sqrt(); n];
    let mut auth = vec![T::zero(); n];
    let mut next = vec![T::zero(); n];
    let mut residual = T::infinity();
    for it in 1..=DEFAULT_MAX_ITER {
        at.apply(&hub, &mut auth);
        let an = norm2(&auth);
        if an == T::zero() {
            return Err(Error::Validation("graph has no edges".into()));
        }
        auth.iter_mut().for_each(|x| *x /= an);
        a.apply(&auth, &mut next);
        // next = A Aᵀ hub / ‖Aᵀ hub‖, so the Rayleigh quotient is hub·next · ‖Aᵀhub‖
        let mu = dot(&hub, &next) * an;
        residual = next
            .iter()
            .zip(&hub)
            .map(|(y, h)| {
                let r = *y * an - mu * *h;
                r * r
            })
            .sum::<T>()
            .sqrt();
        let hn = norm2(&next);
        for (h, y) in hub.iter_mut().zip(&next) {
            *h = *y / hn;
        }
        if residual <= tol * mu {
            let meta = SolverMeta {
                tol: Some(tol.as_f64()),
                iterations: Some(it),
            };
            let mut h = CentralityVector::new(Measure::HitsHub, Side::Broadcast, None, hub);
            h.meta = meta;
            let mut au = CentralityVector::new(Measure::HitsAuthority, Side::Receive, None, auth);
            au.meta = meta;
            return Ok((h, au));
        }
    }
    Err(Error::Convergence {
        iterations: DEFAULT_MAX_ITER,
        residual: residual.as_f64(),
        best: hub.iter().map(|x| x.as_f64()).collect(),
    })
}
