//! Matrix functions `f(tA)` for power series with positive coefficients.
//!
//! A [`SeriesFunction`] is `f(z) = Σ c_k z^k` with every `c_k > 0` and
//! radius of convergence `R`. On a graph with spectral radius `λ₁` the
//! matrix function `f(tA)` is defined and entrywise positive (for connected
//! graphs) when `0 < t < R/λ₁`.

use std::fmt;
use std::sync::Arc;

use crate::dense;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operator::{Adjacency, LinearOperator};
use crate::scalar::{diff_norm1, norm1, Scalar};
use crate::spectral::spectral_radius;

pub const DEFAULT_DENSE_LIMIT: usize = 3000;
pub const DENSE_LIMIT_ENV: &str = "CENTRALITY_DENSE_LIMIT";
pub const MAX_SERIES_TERMS: usize = 50_000;
pub const MAX_NEUMANN_ITER: usize = 20_000;

/// Largest node count for which dense diagonals are computed.
/// `CENTRALITY_DENSE_LIMIT` overrides the default of 3000.
pub fn dense_limit() -> usize {
    std::env::var(DENSE_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DENSE_LIMIT)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Exponential,
    Resolvent,
    Custom,
}

/// Entire (`PInfinity`), divergent at the radius (`PSupInfinity`), or
/// neither (`POnly`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesClass {
    PInfinity,
    PSupInfinity,
    POnly,
}

type CoeffFn<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

#[derive(Clone)]
pub struct SeriesFunction<T> {
    kind: SeriesKind,
    class: SeriesClass,
    radius: T,
    coeff: CoeffFn<T>,
}

impl<T: Scalar> fmt::Debug for SeriesFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesFunction")
            .field("kind", &self.kind)
            .field("class", &self.class)
            .field("radius", &self.radius)
            .finish()
    }
}

impl<T: Scalar> SeriesFunction<T> {
    /// `e^z`: `c_k = 1/k!`, entire.
    pub fn exponential() -> Self {
        Self {
            kind: SeriesKind::Exponential,
            class: SeriesClass::PInfinity,
            radius: T::infinity(),
            coeff: Arc::new(|k| {
                let mut c = 1.0f64;
                for j in 2..=k {
                    c /= j as f64;
                }
                T::lit(c)
            }),
        }
    }

    /// `1/(1 − z)`: `c_k = 1`, radius 1.
    pub fn resolvent() -> Self {
        Self {
            kind: SeriesKind::Resolvent,
            class: SeriesClass::PSupInfinity,
            radius: T::one(),
            coeff: Arc::new(|_| T::one()),
        }
    }

    /// A user-supplied series. The radius and class are taken as declared;
    /// coefficients are checked for positivity as they are generated.
    pub fn custom<F>(coeff: F, radius: T, class: SeriesClass) -> Result<Self>
    where
        F: Fn(usize) -> T + Send + Sync + 'static,
    {
        if !(radius > T::zero()) {
            return Err(Error::Validation(format!(
                "radius of convergence must be positive, got {radius}"
            )));
        }
        if class == SeriesClass::PInfinity && radius.is_finite() {
            return Err(Error::Validation(
                "an entire function must have infinite radius".into(),
            ));
        }
        Ok(Self {
            kind: SeriesKind::Custom,
            class,
            radius,
            coeff: Arc::new(coeff),
        })
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn class(&self) -> SeriesClass {
        self.class
    }

    /// `R_f`; infinite for entire functions.
    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn coefficient(&self, k: usize) -> Result<T> {
        let c = (self.coeff)(k);
        if c > T::zero() && c.is_finite() {
            Ok(c)
        } else {
            Err(Error::Validation(format!(
                "series coefficient c_{k} = {c} is not positive"
            )))
        }
    }

    /// `c_k / c_{k−1}` for `k ≥ 1`, without forming tiny factorials.
    fn ratio(&self, k: usize) -> Result<T> {
        match self.kind {
            SeriesKind::Exponential => Ok(T::one() / T::from_usize_lossy(k)),
            SeriesKind::Resolvent => Ok(T::one()),
            SeriesKind::Custom => Ok(self.coefficient(k)? / self.coefficient(k - 1)?),
        }
    }

    /// `f(z) − c₀ − c₁z` in double precision, accurate for small `|z|`.
    pub fn remainder(&self, z: f64) -> Result<f64> {
        match self.kind {
            SeriesKind::Exponential if z.abs() >= 1.0 => Ok(z.exp() - 1.0 - z),
            SeriesKind::Resolvent => Ok(z * z / (1.0 - z)),
            _ => {
                let mut term = self.coefficient(1)?.as_f64() * z;
                let mut sum = 0.0f64;
                let mut prev_small = false;
                let mut prev_abs = term.abs();
                for k in 2..MAX_SERIES_TERMS {
                    term *= self.ratio(k)?.as_f64() * z;
                    sum += term;
                    let abs = term.abs();
                    if abs == 0.0 {
                        return Ok(sum);
                    }
                    let small = abs <= f64::EPSILON * sum.abs();
                    let r = abs / prev_abs;
                    let tail_ok = r < 1.0 && abs * r / (1.0 - r) <= f64::EPSILON * sum.abs();
                    if small && prev_small && tail_ok {
                        return Ok(sum);
                    }
                    prev_small = small;
                    prev_abs = abs;
                }
                Err(Error::Truncation {
                    terms: MAX_SERIES_TERMS,
                    bound: prev_abs / sum.abs(),
                })
            }
        }
    }

    /// Scalar value `f(z)`.
    pub fn eval(&self, z: f64) -> Result<f64> {
        let c0 = self.coefficient(0)?.as_f64();
        let c1 = self.coefficient(1)?.as_f64();
        Ok(c0 + c1 * z + self.remainder(z)?)
    }
}

/// `t* = R_f / λ₁`, infinite when `f` is entire or `λ₁ = 0`.
pub fn feasible_interval<T: Scalar>(f: &SeriesFunction<T>, lambda1: T) -> T {
    if !f.radius().is_finite() || lambda1 <= T::zero() {
        T::infinity()
    } else {
        f.radius() / lambda1
    }
}

fn check_parameter<T: Scalar>(name: &str, t: T) -> Result<()> {
    if t < T::zero() || !t.is_finite() {
        return Err(Error::Domain(format!(
            "{name} must be a finite nonnegative number, got {t}"
        )));
    }
    Ok(())
}

fn check_len<T>(n: usize, v: &[T]) -> Result<()> {
    if v.len() != n {
        return Err(Error::Validation(format!(
            "vector has length {}, graph has {n} nodes",
            v.len()
        )));
    }
    Ok(())
}

/// `Σ_k c_k t^k M^k v`, summed term by term.
///
/// Stops after two consecutive terms with `‖term‖₁ ≤ tol·‖sum‖₁` whose
/// geometric tail estimate is also below `tol·‖sum‖₁`.
pub fn series_action<T: Scalar, M: LinearOperator<T>>(
    f: &SeriesFunction<T>,
    t: T,
    op: &M,
    v: &[T],
    tol: T,
) -> Result<Vec<T>> {
    let c0 = f.coefficient(0)?;
    let mut term: Vec<T> = v.iter().map(|x| *x * c0).collect();
    let mut acc = term.clone();
    let mut next = vec![T::zero(); v.len()];
    let mut prev_norm = norm1(&term);
    if prev_norm == T::zero() || t == T::zero() {
        return Ok(acc);
    }
    let mut prev_small = false;
    let mut last_rel = T::infinity();
    for k in 1..=MAX_SERIES_TERMS {
        op.apply(&term, &mut next);
        let factor = t * f.ratio(k)?;
        for (ti, ni) in term.iter_mut().zip(&next) {
            *ti = *ni * factor;
        }
        for (ai, ti) in acc.iter_mut().zip(&term) {
            *ai += *ti;
        }
        let tn = norm1(&term);
        let an = norm1(&acc);
        if !tn.is_finite() || !an.is_finite() {
            return Err(Error::Overflow);
        }
        if tn == T::zero() {
            return Ok(acc);
        }
        let small = tn <= tol * an;
        let r = tn / prev_norm;
        let tail_ok = r < T::one() && tn * r / (T::one() - r) <= tol * an;
        if small && prev_small && tail_ok {
            return Ok(acc);
        }
        prev_small = small;
        prev_norm = tn;
        last_rel = tn / an;
    }
    Err(Error::Truncation {
        terms: MAX_SERIES_TERMS,
        bound: last_rel.as_f64(),
    })
}

/// `f(tA) v` for `0 ≤ t < t*`.
pub fn apply_series<T: Scalar>(
    f: &SeriesFunction<T>,
    t: T,
    g: &Graph<T>,
    v: &[T],
    tol: T,
) -> Result<Vec<T>> {
    check_len(g.node_count(), v)?;
    check_parameter("t", t)?;
    if t == T::zero() {
        let c0 = f.coefficient(0)?;
        return Ok(v.iter().map(|x| *x * c0).collect());
    }
    if f.radius().is_finite() {
        let lambda1 = spectral_radius(g, T::default_tol())?;
        let t_star = feasible_interval(f, lambda1);
        if t >= t_star {
            return Err(Error::Domain(format!(
                "t must be < t* = R/lambda1 = {t_star} (lambda1 = {lambda1}), got {t}"
            )));
        }
    }
    series_action(f, t, &Adjacency::new(g), v, tol)
}

/// `e^{βM} v` by scaling: with `s` the smallest power of two such that
/// `β‖M‖/s ≤ 1`, the Taylor series for `e^{(β/s)M}` is applied `s` times.
pub fn exp_action_op<T: Scalar, M: LinearOperator<T>>(
    beta: T,
    op: &M,
    v: &[T],
    tol: T,
) -> Result<Vec<T>> {
    check_parameter("beta", beta)?;
    check_len(op.dim(), v)?;
    if beta == T::zero() {
        return Ok(v.to_vec());
    }
    let bound = op.norm_bound();
    let mut steps: u64 = 1;
    while beta * bound / T::lit(steps as f64) > T::one() {
        steps *= 2;
    }
    let t = beta / T::lit(steps as f64);
    let exp = SeriesFunction::exponential();
    let mut x = v.to_vec();
    for _ in 0..steps {
        x = series_action(&exp, t, op, &x, tol)?;
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Overflow);
    }
    Ok(x)
}

/// `e^{βA} v`.
pub fn exp_action<T: Scalar>(beta: T, g: &Graph<T>, v: &[T], tol: T) -> Result<Vec<T>> {
    exp_action_op(beta, &Adjacency::new(g), v, tol)
}

/// `(I − αA)⁻¹ v` by Neumann iteration `x ← v + αAx`.
pub fn resolvent_solve<T: Scalar>(alpha: T, g: &Graph<T>, v: &[T], tol: T) -> Result<Vec<T>> {
    resolvent_impl(alpha, g, false, v, tol)
}

pub(crate) fn resolvent_impl<T: Scalar>(
    alpha: T,
    g: &Graph<T>,
    transpose: bool,
    v: &[T],
    tol: T,
) -> Result<Vec<T>> {
    check_len(g.node_count(), v)?;
    check_parameter("alpha", alpha)?;
    if alpha == T::zero() || g.node_count() == 0 {
        return Ok(v.to_vec());
    }
    let lambda1 = spectral_radius(g, T::default_tol())?;
    check_resolvent_alpha(alpha, lambda1)?;
    let rho = alpha * lambda1;
    if rho > T::zero() {
        // iterations for the geometric tail to fall below tol
        let predicted = (tol * (T::one() - rho)).ln() / rho.ln();
        if predicted > T::from_usize_lossy(MAX_NEUMANN_ITER) && g.node_count() <= dense_limit() {
            let x = dense::resolvent_direct(g, transpose, alpha.as_f64(), v).ok_or_else(|| {
                Error::Domain(format!("I - alpha*A is singular at alpha = {alpha}"))
            })?;
            return Ok(x.into_iter().map(T::lit).collect());
        }
    }
    if transpose {
        neumann(alpha, rho, &Adjacency::transposed(g), v, tol)
    } else {
        neumann(alpha, rho, &Adjacency::new(g), v, tol)
    }
}

/// Rejects `α` at or above `1/λ₁`, allowing for eigenvalue error.
pub(crate) fn check_resolvent_alpha<T: Scalar>(alpha: T, lambda1: T) -> Result<()> {
    let margin = T::lit(10.0 * T::DEFAULT_TOL).max(T::epsilon() * T::lit(4.0));
    if alpha * lambda1 >= T::one() - margin {
        let bound = if lambda1 > T::zero() {
            T::one() / lambda1
        } else {
            T::infinity()
        };
        return Err(Error::Domain(format!(
            "alpha must be < 1/lambda1 = {bound} (lambda1 = {lambda1}), got {alpha}"
        )));
    }
    Ok(())
}

/// `x ← v + αMx` until the geometric tail bound `‖Δx‖₁ ρ/(1−ρ)` falls to
/// `tol·‖x‖₁`, where `ρ < 1` bounds the contraction factor.
pub(crate) fn neumann<T: Scalar, M: LinearOperator<T>>(
    alpha: T,
    rho: T,
    op: &M,
    v: &[T],
    tol: T,
) -> Result<Vec<T>> {
    let mut x = v.to_vec();
    let mut mx = vec![T::zero(); v.len()];
    let mut next = vec![T::zero(); v.len()];
    let tail = rho / (T::one() - rho);
    let mut rel = T::infinity();
    for _ in 0..MAX_NEUMANN_ITER {
        op.apply(&x, &mut mx);
        for ((ni, vi), mi) in next.iter_mut().zip(v).zip(&mx) {
            *ni = *vi + alpha * *mi;
        }
        let delta = diff_norm1(&next, &x);
        std::mem::swap(&mut x, &mut next);
        let xn = norm1(&x);
        if delta == T::zero() || delta * tail.max(T::one()) <= tol * xn {
            return Ok(x);
        }
        rel = delta / xn;
    }
    Err(Error::Truncation {
        terms: MAX_NEUMANN_ITER,
        bound: rel.as_f64(),
    })
}

/// Diagonal of `f(tA)` for an undirected graph from the full symmetric
/// eigendecomposition `A = QΛQᵀ`:
/// `[f(tA)]_ii = c₀ + c₁ t a_ii + Σ_k (f − c₀ − c₁z)(tλ_k) Q_ik²`.
/// Splitting off the first two Maclaurin terms keeps the small-`t`
/// structure (`c₂t² d_i`) resolvable in floating point.
pub fn fa_diagonal<T: Scalar>(f: &SeriesFunction<T>, t: T, g: &Graph<T>) -> Result<Vec<T>> {
    if g.is_directed() {
        return Err(Error::Unsupported(
            "diagonal measures are only defined here for undirected graphs".into(),
        ));
    }
    let n = g.node_count();
    let limit = dense_limit();
    if n > limit {
        return Err(Error::Capacity { n, limit });
    }
    check_parameter("t", t)?;
    let c0 = f.coefficient(0)?;
    if t == T::zero() || n == 0 {
        return Ok(vec![c0; n]);
    }
    let c1 = f.coefficient(1)?;
    let (values, vectors) = dense::symmetric_eigen(g);
    let lambda1 = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let t_star = feasible_interval(f, T::lit(lambda1));
    if t >= t_star {
        let msg = match f.kind() {
            SeriesKind::Resolvent => format!(
                "alpha must be < 1/lambda1 = {t_star} (lambda1 = {lambda1}), got {t}"
            ),
            _ => format!("t must be < t* = R/lambda1 = {t_star} (lambda1 = {lambda1}), got {t}"),
        };
        return Err(Error::Domain(msg));
    }
    let tf = t.as_f64();
    let weights = values
        .iter()
        .map(|&lam| f.remainder(tf * lam))
        .collect::<Result<Vec<f64>>>()?;
    let (c0f, c1f) = (c0.as_f64(), c1.as_f64());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = 0.0f64;
        for (k, w) in weights.iter().enumerate() {
            let q = vectors[(i, k)];
            s += w * q * q;
        }
        let value = c0f + c1f * tf * g.weight(i, i).as_f64() + s;
        if !value.is_finite() {
            return Err(Error::Overflow);
        }
        out.push(T::lit(value));
    }
    Ok(out)
}
