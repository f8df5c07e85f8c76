//! Matrix-free linear operators.

use crate::graph::Graph;
use crate::scalar::Scalar;

/// A square operator that can be applied to vectors.
pub trait LinearOperator<T: Scalar> {
    fn dim(&self) -> usize;

    /// `y = M x`; `y` is fully overwritten.
    fn apply(&self, x: &[T], y: &mut [T]);

    /// An upper bound on the spectral radius (any induced norm).
    fn norm_bound(&self) -> T;
}

/// The adjacency matrix `A` of a graph, or its transpose.
#[derive(Debug, Clone, Copy)]
pub struct Adjacency<'a, T> {
    graph: &'a Graph<T>,
    transpose: bool,
}

impl<'a, T: Scalar> Adjacency<'a, T> {
    pub fn new(graph: &'a Graph<T>) -> Self {
        Self {
            graph,
            transpose: false,
        }
    }

    pub fn transposed(graph: &'a Graph<T>) -> Self {
        Self {
            graph,
            transpose: true,
        }
    }
}

impl<T: Scalar> LinearOperator<T> for Adjacency<'_, T> {
    fn dim(&self) -> usize {
        self.graph.node_count()
    }

    fn apply(&self, x: &[T], y: &mut [T]) {
        if self.transpose {
            self.graph.in_adjacency().mul_vec(x, y)
        } else {
            self.graph.out_adjacency().mul_vec(x, y)
        }
    }

    fn norm_bound(&self) -> T {
        let max = |v: Vec<T>| v.into_iter().fold(T::zero(), T::max);
        let rows = max(self.graph.out_adjacency().row_sums());
        let cols = max(self.graph.in_adjacency().row_sums());
        rows.min(cols)
    }
}
