//! Dense reference implementations used as independent oracles.
//!
//! Nothing here calls into the library's numerical code: the oracles work
//! on plain `Vec<Vec<f64>>` matrices built from the graph's edge list.
#![allow(dead_code)]

use walkcent::Graph64;

pub type Mat = Vec<Vec<f64>>;

pub fn adjacency(g: &Graph64) -> Mat {
    let n = g.node_count();
    let mut a = vec![vec![0.0; n]; n];
    for e in g.edges() {
        a[e.source][e.target] += e.weight;
        if !g.is_directed() && e.source != e.target {
            a[e.target][e.source] += e.weight;
        }
    }
    a
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

pub fn matvec(a: &Mat, x: &[f64]) -> Vec<f64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

fn inf_norm(a: &Mat) -> f64 {
    a.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// `exp(t·A)` by Taylor series with scaling and squaring, summed until the
/// terms stop changing the result in double precision.
pub fn expm(a: &Mat, t: f64) -> Mat {
    let n = a.len();
    let norm = inf_norm(a) * t.abs();
    let mut s = 0;
    while norm / 2f64.powi(s) > 0.5 {
        s += 1;
    }
    let scale = t / 2f64.powi(s);
    let b: Mat = a.iter().map(|r| r.iter().map(|x| x * scale).collect()).collect();
    let mut sum = identity(n);
    let mut term = identity(n);
    for k in 1..60 {
        term = matmul(&term, &b);
        let kf = k as f64;
        term.iter_mut().flatten().for_each(|x| *x /= kf);
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                let old = sum[i][j];
                sum[i][j] += term[i][j];
                changed |= sum[i][j] != old;
            }
        }
        if !changed {
            break;
        }
    }
    for _ in 0..s {
        sum = matmul(&sum, &sum);
    }
    sum
}

/// Solves `M x = b` by Gaussian elimination with partial pivoting.
pub fn solve(m: &Mat, b: &[f64]) -> Vec<f64> {
    let n = m.len();
    let mut a: Mat = m.iter().zip(b).map(|(r, bi)| {
        let mut row = r.clone();
        row.push(*bi);
        row
    }).collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..=n {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (a[i][n] - s) / a[i][i];
    }
    x
}

/// `I − αA`.
pub fn shifted_identity(a: &Mat, alpha: f64) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 } - alpha * a[i][j]).collect())
        .collect()
}

/// Diagonal of `(I − αA)⁻¹`, one column solve at a time.
pub fn resolvent_diagonal(a: &Mat, alpha: f64) -> Vec<f64> {
    let m = shifted_identity(a, alpha);
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            solve(&m, &e)[i]
        })
        .collect()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
/// eigenvalues and the eigenvector matrix (columns).
pub fn jacobi_eigen(sym: &Mat) -> (Vec<f64>, Mat) {
    let n = sym.len();
    let mut a = sym.clone();
    let mut v = identity(n);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i][i]).collect(), v)
}

/// Diagonal of `f(A)` for symmetric `A` through its eigendecomposition.
pub fn spectral_diagonal(a: &Mat, f: impl Fn(f64) -> f64) -> Vec<f64> {
    let (vals, vecs) = jacobi_eigen(a);
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|k| f(vals[k]) * vecs[i][k] * vecs[i][k]).sum())
        .collect()
}

/// Perron vector of a nonnegative irreducible matrix by repeated squaring
/// of `(A + I)`; returns the positive unit-2-norm direction of `M^∞ 1`.
pub fn perron_by_squaring(a: &Mat) -> Vec<f64> {
    let n = a.len();
    let mut m: Mat = (0..n)
        .map(|i| (0..n).map(|j| a[i][j] + if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut prev = vec![0.0; n];
    for _ in 0..200 {
        m = matmul(&m, &m);
        let mx = m.iter().flatten().fold(0.0f64, |s, x| s.max(*x));
        m.iter_mut().flatten().for_each(|x| *x /= mx);
        let x = unit(&matvec(&m, &vec![1.0; n]));
        let d: f64 = x.iter().zip(&prev).map(|(p, q)| (p - q).abs()).sum();
        prev = x;
        if d < 1e-15 {
            break;
        }
    }
    prev
}

pub fn unit(x: &[f64]) -> Vec<f64> {
    let s = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter().map(|v| v / s).collect()
}

/// Largest entrywise relative error. Reference entries at rounding level
/// (structural zeros, e.g. outside the support of a HITS vector) are
/// measured against the reference's largest entry instead.
pub fn max_rel_err(got: &[f64], want: &[f64]) -> f64 {
    assert_eq!(got.len(), want.len());
    let scale = want.iter().fold(0.0f64, |s, w| s.max(w.abs()));
    got.iter()
        .zip(want)
        .map(|(g, w)| {
            let d = if w.abs() <= 1e-13 * scale { scale } else { w.abs() };
            (g - w).abs() / d
        })
        .fold(0.0, f64::max)
}

/// Largest eigenvalue magnitude of a symmetric matrix.
pub fn sym_spectral_radius(a: &Mat) -> f64 {
    jacobi_eigen(a).0.iter().fold(0.0f64, |s, x| s.max(x.abs()))
}

/// Weighted triangle count at each node by explicit enumeration of
/// unordered pairs of distinct neighbours.
pub fn brute_triangles(a: &Mat) -> Vec<f64> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut s = 0.0;
            for j in 0..n {
                for k in j + 1..n {
                    if j != i && k != i {
                        s += a[i][j] * a[j][k] * a[k][i];
                    }
                }
            }
            s
        })
        .collect()
}
