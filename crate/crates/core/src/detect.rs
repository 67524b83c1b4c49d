//! Separating triangle-heavy vertices (`T_v ≥ τ`) from triangle-light ones
//! (`T_v ≤ τ/20`).
//!
//! For `τ ≤ n` the detector repeatedly subsamples vertices at rate `1/τ` and
//! reports every vertex that lies in a triangle of the sampled induced
//! subgraph, found with the matrix kernel. For `τ > n` it samples vertex pairs
//! around each vertex directly. A single round reports a heavy vertex with
//! probability at least 2/3 and a light one with probability at most 1/3;
//! [`detect_amplified`] takes a strict majority over `O(log n)` rounds.

use serde::{Deserialize, Serialize};

use crate::access::{GraphAccess, QueryLedger};
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::kernel::{touched_in, DenseAdjacency, MatMulConfig};
use crate::rng::{bernoulli_subset, RandomSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetectorBranch {
    MatMul,
    Sampling,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectorParams {
    pub tau: f64,
    /// Odd number of majority-vote rounds.
    pub rounds: usize,
    pub branch: DetectorBranch,
}

impl DetectorParams {
    pub fn new(tau: f64, n: usize) -> Result<Self> {
        check_tau(tau)?;
        Ok(Self {
            tau,
            rounds: amplification_rounds(n),
            branch: if tau <= n as f64 {
                DetectorBranch::MatMul
            } else {
                DetectorBranch::Sampling
            },
        })
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(contract(format!(
            "heaviness threshold {tau} must be positive and finite"
        )))
    }
}

/// Smallest odd integer `≥ x`.
pub fn next_odd_at_least(x: f64) -> usize {
    let c = x.ceil().max(1.0) as usize;
    if c % 2 == 1 {
        c
    } else {
        c + 1
    }
}

/// `max(3, next odd ≥ 6 ln max(n, 3))`.
pub fn amplification_rounds(n: usize) -> usize {
    next_odd_at_least(6.0 * (n.max(3) as f64).ln()).max(3)
}

/// Iterations of the subsampling branch: `ceil(6τ²)`, at least one.
pub fn matmul_iterations(tau: f64) -> u64 {
    ((6.0 * tau * tau).ceil() as u64).max(1)
}

/// Trials per vertex of the sampling branch: `ceil(2n²/τ)`.
pub fn sampling_trials(n: usize, tau: f64) -> u64 {
    ((2.0 * (n as f64).powi(2) / tau).ceil() as u64).max(1)
}

/// One round of the `τ ≤ n` branch. Returns ascending vertex ids.
pub fn detect_once_matmul(g: &Graph, tau: f64, cfg: &MatMulConfig, rng: &mut RandomSource) -> Result<Vec<usize>> {
    check_tau(tau)?;
    let p = (1.0 / tau).min(1.0);
    let iterations = if p >= 1.0 { 1 } else { matmul_iterations(tau) };
    let mut reported = vec![false; g.n()];
    for _ in 0..iterations {
        let kept = bernoulli_subset(g.n(), p, rng);
        if kept.len() < 3 {
            continue;
        }
        let adj = DenseAdjacency::induced(g, &kept);
        for local in touched_in(&adj, cfg) {
            reported[kept[local]] = true;
        }
    }
    Ok(collect(&reported))
}

/// One round of the `τ > n` branch, through counted queries.
pub fn detect_once_sampling(access: &mut GraphAccess<'_>, tau: f64, rng: &mut RandomSource) -> Result<Vec<usize>> {
    check_tau(tau)?;
    let n = access.n();
    let trials = sampling_trials(n, tau);
    let mut out = Vec::new();
    for v in 0..n {
        for _ in 0..trials {
            let u = access.random_vertex(rng)?;
            let w = access.random_vertex(rng)?;
            if u == v || w == v || u == w {
                continue;
            }
            if access.pair(v, u)? && access.pair(v, w)? && access.pair(u, w)? {
                out.push(v);
                break;
            }
        }
    }
    Ok(out)
}

/// Majority vote over [`amplification_rounds`] independent rounds of the branch
/// matching `τ`. Sampling-branch queries are added to `ledger`.
pub fn detect_amplified(
    g: &Graph,
    tau: f64,
    cfg: &MatMulConfig,
    rng: &RandomSource,
    ledger: &mut QueryLedger,
) -> Result<Vec<usize>> {
    let params = DetectorParams::new(tau, g.n())?;
    let mut votes = vec![0usize; g.n()];
    for round in 0..params.rounds {
        let mut round_rng = rng.derive(round as u64);
        let reported = match params.branch {
            DetectorBranch::MatMul => detect_once_matmul(g, tau, cfg, &mut round_rng)?,
            DetectorBranch::Sampling => {
                let mut access = GraphAccess::new(g);
                let r = detect_once_sampling(&mut access, tau, &mut round_rng)?;
                ledger.merge(&access.ledger());
                r
            }
        };
        for v in reported {
            votes[v] += 1;
        }
    }
    Ok((0..g.n()).filter(|&v| 2 * votes[v] > params.rounds).collect())
}

fn collect(flags: &[bool]) -> Vec<usize> {
    flags.iter().enumerate().filter(|(_, &f)| f).map(|(v, _)| v).collect()
}
