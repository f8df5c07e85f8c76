//! Dense double-precision kernels for small graphs.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::graph::Graph;
use crate::scalar::Scalar;

pub(crate) fn adjacency_f64<T: Scalar>(g: &Graph<T>, transpose: bool) -> DMatrix<f64> {
    let n = g.node_count();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for (j, w) in g.out_adjacency().row(i) {
            if transpose {
                a[(j, i)] = w.as_f64();
            } else {
                a[(i, j)] = w.as_f64();
            }
        }
    }
    a
}

/// Eigenvalues and orthonormal eigenvectors (columns) of a symmetric
/// adjacency matrix.
pub(crate) fn symmetric_eigen<T: Scalar>(g: &Graph<T>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(adjacency_f64(g, false));
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// Solves `(I − αA) x = v` (or with `Aᵀ`) by LU factorization.
pub(crate) fn resolvent_direct<T: Scalar>(
    g: &Graph<T>,
    transpose: bool,
    alpha: f64,
    v: &[T],
) -> Option<Vec<f64>> {
    let n = g.node_count();
    let m = DMatrix::<f64>::identity(n, n) - adjacency_f64(g, transpose) * alpha;
    let rhs = DVector::from_iterator(n, v.iter().map(|x| x.as_f64()));
    m.lu().solve(&rhs).map(|x| x.iter().copied().collect())
}
