//! Dominant and subdominant eigen-information of the adjacency matrix.
//!
//! Power iteration runs on the shifted matrix `A + I`. For a nonnegative
//! irreducible `A` every non-Perron eigenvalue `λ` satisfies
//! `|λ + 1| < λ₁ + 1`, so the iteration converges even on bipartite graphs
//! where plain power iteration oscillates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operator::{Adjacency, LinearOperator};
use crate::scalar::{dot, norm2, Scalar};

pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Which dominant eigenvector: right (`A x = λ x`) or left (`Aᵀ y = λ y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenSide {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralInfo<T> {
    pub lambda1: T,
    /// Unit 2-norm, entrywise positive for (strongly) connected graphs.
    pub dominant_vector: Vec<T>,
    pub side: EigenSide,
    /// Second largest eigenvalue (signed), when computed.
    pub lambda2: Option<T>,
    /// `lambda1 - lambda2`, when `lambda2` is known.
    pub gap: Option<T>,
    pub iterations: usize,
    /// `‖A v − λ₁ v‖₂` at exit.
    pub residual: T,
}

impl<T: Scalar> SpectralInfo<T> {
    pub fn lambda2_abs(&self) -> Option<T> {
        self.lambda2.map(T::abs)
    }
}

/// Dominant eigenpair of `A` (right) or `Aᵀ` (left) by shifted power
/// iteration from the uniform vector. Stops once the relative residual
/// drops to `tol`.
pub fn dominant_eigenpair<T: Scalar>(
    g: &Graph<T>,
    side: EigenSide,
    tol: T,
    max_iter: usize,
) -> Result<SpectralInfo<T>> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_strongly_connected() {
        return Err(Error::Disconnected(if g.is_directed() {
            "strongly connected"
        } else {
            "connected"
        }));
    }
    let info = match side {
        EigenSide::Right => shifted_power(&Adjacency::new(g), tol, max_iter)?,
        EigenSide::Left => shifted_power(&Adjacency::transposed(g), tol, max_iter)?,
    };
    Ok(SpectralInfo {
        lambda1: info.0,
        dominant_vector: info.1,
        side,
        lambda2: None,
        gap: None,
        iterations: info.2,
        residual: info.3,
    })
}

/// Power iteration on `M + I`; returns `(λ, v, iterations, residual)`.
pub(crate) fn shifted_power<T: Scalar, M: LinearOperator<T>>(
    op: &M,
    tol: T,
    max_iter: usize,
) -> Result<(T, Vec<T>, usize, T)> {
    let n = op.dim();
    let mut v = vec![T::one() / T::from_usize_lossy(n).sqrt(); n];
    let mut w = vec![T::zero(); n];
    let mut residual = T::infinity();
    for it in 1..=max_iter {
        op.apply(&v, &mut w);
        let lambda = dot(&v, &w);
        residual = w
            .iter()
            .zip(&v)
            .map(|(a, b)| {
                let r = *a - lambda * *b;
                r * r
            })
            .sum::<T>()
            .sqrt();
        if residual <= tol * lambda.abs() || residual == T::zero() {
            return Ok((lambda, v, it, residual));
        }
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += *vi;
        }
        let norm = norm2(&w);
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = *wi / norm;
        }
    }
    Err(Error::Convergence {
        iterations: max_iter,
        residual: residual.as_f64(),
        best: v.iter().map(|x| x.as_f64()).collect(),
    })
}

/// Second largest eigenvalue `λ₂` of an undirected graph.
///
/// Iterates `C = A + λ₁ I − 2λ₁ q₁q₁ᵀ`, which maps `q₁` to zero and every
/// other eigenvalue `λ` to `λ + λ₁ ≥ 0`; the dominant eigenvalue of `C` is
/// therefore `λ₂ + λ₁`. The signed `λ₂` is the Rayleigh quotient of the
/// converged vector with `A`.
pub fn second_eigenvalue<T: Scalar>(g: &Graph<T>, info: &SpectralInfo<T>, tol: T) -> Result<T> {
    if g.is_directed() {
        return Err(Error::Unsupported(
            "the second eigenvalue is only computed for undirected graphs".into(),
        ));
    }
    let n = g.node_count();
    let q = &info.dominant_vector;
    if q.len() != n {
        return Err(Error::Validation("spectral info does not match graph".into()));
    }
    if n == 1 {
        return Ok(T::zero());
    }
    let lambda1 = info.lambda1;
    let shift = lambda1;
    let op = Adjacency::new(g);
    let project = |x: &mut [T]| {
        let c = dot(q, x);
        for (xi, qi) in x.iter_mut().zip(q) {
            *xi -= c * *qi;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut x: Vec<T> = (0..n).map(|_| T::lit(rng.gen_range(0.5..1.5))).collect();
    project(&mut x);
    let nx = norm2(&x);
    x.iter_mut().for_each(|v| *v /= nx);
    let mut ax = vec![T::zero(); n];
    let mut residual = T::infinity();
    let scale = lambda1 + shift;
    for _ in 0..DEFAULT_MAX_ITER {
        op.apply(&x, &mut ax);
        project(&mut ax);
        // y = (A + σI) x restricted to q₁⊥
        let y: Vec<T> = ax.iter().zip(&x).map(|(a, b)| *a + shift * *b).collect();
        let mu = dot(&x, &y);
        residual = y
            .iter()
            .zip(&x)
            .map(|(a, b)| {
                let r = *a - mu * *b;
                r * r
            })
            .sum::<T>()
            .sqrt();
        if residual <= tol * scale {
            op.apply(&x, &mut ax);
            return Ok(dot(&x, &ax));
        }
        let ny = norm2(&y);
        if ny == T::zero() {
            // every remaining eigenvalue equals −λ₁
            return Ok(-lambda1);
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = *yi / ny;
        }
        project(&mut x);
    }
    Err(Error::Convergence {
        iterations: DEFAULT_MAX_ITER,
        residual: residual.as_f64(),
        best: x.iter().map(|v| v.as_f64()).collect(),
    })
}

/// Dominant pair plus `λ₂` and the gap, at the default tolerance.
pub fn spectral_info<T: Scalar>(g: &Graph<T>) -> Result<SpectralInfo<T>> {
    if g.is_directed() {
        return Err(Error::Unsupported(
            "the spectral gap is only computed for undirected graphs".into(),
        ));
    }
    let tol = T::default_tol();
    let mut info = dominant_eigenpair(g, EigenSide::Right, tol, DEFAULT_MAX_ITER)?;
    let lambda2 = second_eigenvalue(g, &info, tol)?;
    info.lambda2 = Some(lambda2);
    info.gap = Some(info.lambda1 - lambda2);
    Ok(info)
}

/// `λ₁ − λ₂` of a connected undirected graph.
pub fn spectral_gap<T: Scalar>(g: &Graph<T>) -> Result<T> {
    let info = spectral_info(g)?;
    Ok(info.gap.expect("gap filled by spectral_info"))
}

/// Spectral radius of a nonnegative adjacency matrix of any connectivity:
/// the largest Perron root over its strongly connected components.
pub fn spectral_radius<T: Scalar>(g: &Graph<T>, tol: T) -> Result<T> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rho = T::zero();
    for comp in g.strongly_connected_components() {
        let lambda = if comp.len() == 1 {
            g.weight(comp[0], comp[0])
        } else {
            let sub = g.induced_subgraph(&comp);
            shifted_power(&Adjacency::new(&sub), tol, DEFAULT_MAX_ITER)?.0
        };
        rho = rho.max(lambda);
    }
    Ok(rho)
}
