//! Triangle counting in the general graph query model.
//!
//! Exact counting goes through a dense matrix kernel. The estimators only see
//! the graph through [`GraphAccess`], which records every query it answers:
//!
//! * [`estimate_dense`] recursively splits triangles into those meeting heavy
//!   vertices (sampled directly) and the rest (recursed on a vertex sample).
//! * [`estimate_sparse`] counts triangles rooted at low-degree vertices by edge
//!   sampling and hands the high-degree core to the dense estimator.
//!
//! Randomness comes from a seeded [`RandomSource`], so every run is reproducible.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod access;
pub mod cli;
pub mod dense;
pub mod detect;
pub mod error;
pub mod estimate;
pub mod generate;
pub mod graph;
pub mod heavy;
pub mod kernel;
pub mod oracle;
pub mod rng;
pub mod sparse;

pub use access::{GraphAccess, QueryLedger};
pub use dense::{
    estimate_additive, estimate_dense, estimate_relative_with_advice, AdditiveRun, DenseMode, DenseParams,
};
pub use detect::detect_amplified;
pub use error::{Error, Result};
pub use estimate::{Algorithm, Estimate};
pub use generate::{gen_gnp, gen_planted};
pub use graph::{parse_edge_list, read_edge_list, Graph};
pub use heavy::{estimate_heavy_triangles, HeavyEstimate};
pub use kernel::{count_triangles_exact, Kernel, MatMulConfig};
pub use oracle::OracleReport;
pub use rng::RandomSource;
pub use sparse::{estimate_sparse, estimate_sparse_with_advice, SparseParams, SparseRun};
