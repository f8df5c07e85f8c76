//! PageRank on the Google matrix `P = αS + (1 − α) v 1ᵀ`.
//!
//! `H = AᵀD⁻¹` is the column-substochastic transition matrix (dangling
//! columns are zero) and `S = H + (1/n) 1 aᵀ` patches each dangling column
//! with the uniform distribution. Neither `S` nor `P` is materialized;
//! every solver works through [`GoogleModel::apply`].

use crate::error::{Error, Result};
use crate::graph::{Csr, DegreeSide, Graph};
use crate::matfunc::{exp_action_op, neumann};
use crate::operator::LinearOperator;
use crate::scalar::{diff_norm1, norm1, Scalar};

pub const DEFAULT_ALPHA: f64 = 0.85;
/// Damping factors above this are rejected: the chain mixes too slowly
/// and the ranking becomes ill-conditioned as α → 1.
pub const MAX_ALPHA: f64 = 0.999;

/// Column-oriented transition structure together with damping and
/// preference.
#[derive(Debug, Clone)]
pub struct GoogleModel<T> {
    n: usize,
    /// Row `j` lists `(i, h_ij)`, i.e. column `j` of `H`.
    columns: Csr<T>,
    dangling: Vec<bool>,
    alpha: T,
    preference: Vec<T>,
}

/// Builds the model. `preference = None` means uniform; a supplied vector
/// must be nonnegative with positive sum and is rescaled to sum to one.
/// Undirected graphs are read as bidirected. `α = 0` is accepted as the
/// trivial boundary.
pub fn build_model<T: Scalar>(
    g: &Graph<T>,
    alpha: T,
    preference: Option<&[T]>,
) -> Result<GoogleModel<T>> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(alpha >= T::zero()) || alpha >= T::one() {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    if alpha > T::lit(MAX_ALPHA) {
        return Err(Error::Domain(format!(
            "alpha = {alpha} is too close to 1 (max {MAX_ALPHA}); convergence degrades and the limit is not supported"
        )));
    }
    if alpha > T::lit(0.99) {
        log::warn!("alpha = {alpha} is close to 1; power iteration will converge slowly");
    }
    let preference = match preference {
        None => vec![T::one() / T::from_usize_lossy(n); n],
        Some(v) => {
            if v.len() != n {
                return Err(Error::Validation(format!(
                    "preference has length {}, graph has {n} nodes",
                    v.len()
                )));
            }
            if v.iter().any(|x| !(*x >= T::zero()) || !x.is_finite()) {
                return Err(Error::Validation(
                    "preference entries must be finite and nonnegative".into(),
                ));
            }
            let s: T = v.iter().copied().sum();
            if !(s > T::zero()) {
                return Err(Error::Validation("preference sums to zero".into()));
            }
            v.iter().map(|x| *x / s).collect()
        }
    };
    let out_deg = g.degrees(DegreeSide::Out);
    let adj = g.out_adjacency();
    let mut rows = Vec::with_capacity(adj.nnz());
    for (j, &d) in out_deg.iter().enumerate() {
        for (i, w) in adj.row(j) {
            rows.push((j, i, w / d));
        }
    }
    let columns = Graph::from_edges(n, rows, true, true)?.out_adjacency().clone();
    Ok(GoogleModel {
        n,
        columns,
        dangling: out_deg.iter().map(|d| *d == T::zero()).collect(),
        alpha,
        preference,
    })
}

impl<T: Scalar> GoogleModel<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn preference(&self) -> &[T] {
        &self.preference
    }

    pub fn dangling(&self) -> &[bool] {
        &self.dangling
    }

    /// `y = H x`.
    pub fn apply_h(&self, x: &[T], y: &mut [T]) {
        y.iter_mut().for_each(|v| *v = T::zero());
        for (j, &xj) in x.iter().enumerate() {
            for (i, h) in self.columns.row(j) {
                y[i] += h * xj;
            }
        }
    }

    /// Dense `H`, row-major.
    pub fn h_dense(&self) -> Vec<Vec<T>> {
        let mut h = vec![vec![T::zero(); self.n]; self.n];
        for j in 0..self.n {
            for (i, w) in self.columns.row(j) {
                h[i][j] = w;
            }
        }
        h
    }

    /// `y = P x = αHx + (α/n)(aᵀx) 1 + (1 − α)(1ᵀx) v`.
    pub fn apply(&self, x: &[T], y: &mut [T]) {
        self.apply_h(x, y);
        let dangling_mass: T = x
            .iter()
            .zip(&self.dangling)
            .filter(|(_, d)| **d)
            .map(|(v, _)| *v)
            .sum();
        let total: T = x.iter().copied().sum();
        let uniform = self.alpha * dangling_mass / T::from_usize_lossy(self.n);
        let teleport = (T::one() - self.alpha) * total;
        for (yi, vi) in y.iter_mut().zip(&self.preference) {
            *yi = self.alpha * *yi + uniform + teleport * *vi;
        }
    }
}

impl<T: Scalar> LinearOperator<T> for GoogleModel<T> {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, x: &[T], y: &mut [T]) {
        GoogleModel::apply(self, x, y)
    }

    /// `P` is column-stochastic, so `‖P‖₁ = 1`.
    fn norm_bound(&self) -> T {
        T::one()
    }
}

struct HOperator<'a, T>(&'a GoogleModel<T>);

impl<T: Scalar> LinearOperator<T> for HOperator<'_, T> {
    fn dim(&self) -> usize {
        self.0.n
    }

    fn apply(&self, x: &[T], y: &mut [T]) {
        self.0.apply_h(x, y)
    }

    fn norm_bound(&self) -> T {
        T::one()
    }
}

/// Power iteration `p ← P p` from `p₀ = v` until `‖Δp‖₁ ≤ tol`.
pub fn pagerank_power<T: Scalar>(model: &GoogleModel<T>, tol: T, max_iter: usize) -> Result<Vec<T>> {
    let mut p = model.preference.clone();
    let mut next = vec![T::zero(); model.n];
    let mut delta = T::infinity();
    for _ in 0..max_iter {
        model.apply(&p, &mut next);
        // guard against drift away from the simplex
        let s: T = next.iter().copied().sum();
        next.iter_mut().for_each(|x| *x /= s);
        delta = diff_norm1(&next, &p);
        std::mem::swap(&mut p, &mut next);
        if delta <= tol {
            return Ok(p);
        }
    }
    Err(Error::Convergence {
        iterations: max_iter,
        residual: delta.as_f64(),
        best: p.iter().map(|x| x.as_f64()).collect(),
    })
}

/// Solves `(I − αH) x = v` by Neumann iteration and returns `x / (1ᵀx)`.
///
/// This coincides with the stationary vector of `P` when dangling columns
/// are redistributed like the preference, which holds for the uniform
/// preference.
pub fn pagerank_linear<T: Scalar>(model: &GoogleModel<T>, tol: T) -> Result<Vec<T>> {
    let v = &model.preference;
    let x = if model.alpha == T::zero() {
        v.clone()
    } else {
        neumann(model.alpha, model.alpha, &HOperator(model), v, tol)?
    };
    let s = norm1(&x);
    Ok(x.into_iter().map(|xi| xi / s).collect())
}

/// `H 1`, whose ranking PageRank approaches as α → 0⁺ when the
/// preference is uniform. No limit is claimed for other preferences.
pub fn small_alpha_limit<T: Scalar>(g: &Graph<T>) -> Result<Vec<T>> {
    let model = build_model(g, T::lit(0.5), None)?;
    let mut y = vec![T::zero(); model.n];
    model.apply_h(&vec![T::one(); model.n], &mut y);
    Ok(y)
}

/// Row sums `e^{tP} 1` (heat-kernel PageRank), unscaled. Column sums of
/// `e^{tP}` all equal `e^t`.
pub fn heat_kernel_rowsums<T: Scalar>(model: &GoogleModel<T>, t: T, tol: T) -> Result<Vec<T>> {
    if model.preference.iter().any(|x| !(*x > T::zero())) {
        return Err(Error::Validation(
            "heat-kernel PageRank needs a strictly positive preference".into(),
        ));
    }
    exp_action_op(t, model, &vec![T::one(); model.n], tol)
}

/// `e^{tP} x` for an arbitrary vector, using the same scaled Taylor action.
pub fn heat_kernel_action<T: Scalar>(model: &GoogleModel<T>, t: T, x: &[T], tol: T) -> Result<Vec<T>> {
    exp_action_op(t, model, x, tol)
}
