//! Walk-based, parameter-dependent centrality measures for networks.
//!
//! The library covers degree, eigenvector, Katz, resolvent and exponential
//! subgraph centrality, total communicability, HITS, PageRank and
//! heat-kernel PageRank, together with the ranking tools used to study how
//! the parameterized measures interpolate between degree centrality (small
//! parameter) and eigenvector centrality (parameter at the top of its
//! feasible range).
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! at the crate root fix the common double-precision instantiations.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod centrality;
mod dense;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod matfunc;
pub mod operator;
pub mod pagerank;
pub mod ranking;
pub mod scalar;
pub mod spectral;

pub use centrality::{CentralityVector, Measure, Preference, Side};
pub use error::{Error, Result};
pub use graph::{DegreeSide, EdgeListOptions, Graph};
pub use matfunc::SeriesFunction;
pub use pagerank::GoogleModel;
pub use ranking::{Ranking, SweepFamily, SweepResult, TopK};
pub use scalar::Scalar;
pub use spectral::{EigenSide, SpectralInfo};

pub type Graph64 = Graph<f64>;
pub type Graph32 = Graph<f32>;
pub type CentralityVector64 = CentralityVector<f64>;
pub type SpectralInfo64 = SpectralInfo<f64>;
pub type SeriesFunction64 = SeriesFunction<f64>;
pub type GoogleModel64 = GoogleModel<f64>;
pub type Ranking64 = Ranking<f64>;
