//! Triangle estimation for sparse graphs, parameterized by `m`.
//!
//! Vertices of degree at least `θ` form a small core whose triangles go to the
//! dense counter. Every other triangle is rooted at its ≺-minimal vertex `v`
//! (degree order), which has degree below `θ`; those are estimated by sampling
//! a uniform edge `(u, v)` with `u ≻ v`, a uniform neighbor `w` of `v`, and
//! adding `d(v)` whenever `w ≻ v` closes the triangle.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::access::{GraphAccess, QueryLedger};
use crate::dense::{estimate_additive, DenseParams};
use crate::error::{contract, Result};
use crate::estimate::{advice_search, advice_width, median, Algorithm, Estimate};
use crate::graph::{degree_key_less, Graph};
use crate::heavy::log_floor;
use crate::rng::RandomSource;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseParams {
    /// Multiplies edge-sample and loop counts. 1 keeps the guarantees.
    pub scale: f64,
    /// Runs of the dense core count whose median is kept (odd).
    pub core_width: usize,
    /// Dense-counter settings for the core, including `q` and `ω`.
    pub dense: DenseParams,
}

impl Default for SparseParams {
    fn default() -> Self {
        Self {
            scale: 1.0,
            core_width: 9,
            dense: DenseParams::default(),
        }
    }
}

impl SparseParams {
    pub fn omega(&self) -> f64 {
        self.dense.matmul.omega
    }

    fn validate(&self) -> Result<()> {
        self.dense.validate()?;
        if self.core_width.is_multiple_of(2) {
            return Err(contract("core_width must be odd"));
        }
        if !(self.scale > 0.0) {
            return Err(contract("scale must be positive"));
        }
        Ok(())
    }
}

/// Degree threshold balancing the dense-core cost against the sampling loop:
/// `θ = m^((ω−1)/(ω+1)) · T̃^((3−ω)/(ω+1)) · ε^((6−2ω)/(ω+1))`.
pub fn theta(m: f64, advice: f64, epsilon: f64, omega: f64) -> Result<f64> {
    if !(m >= 1.0) || !(advice >= 1.0) || !(epsilon > 0.0 && epsilon < 1.0) || !(omega > 2.0 && omega <= 3.0) {
        return Err(contract(format!(
            "theta needs m >= 1, advice >= 1, epsilon in (0,1), omega in (2,3]; got {m}, {advice}, {epsilon}, {omega}"
        )));
    }
    let d = omega + 1.0;
    Ok(m.powf((omega - 1.0) / d) * advice.powf((3.0 - omega) / d) * epsilon.powf((6.0 - 2.0 * omega) / d))
}

/// Edge samples used to find high-degree vertices: `ceil(γ · 2m ln*(n) / θ)`.
pub fn high_degree_samples(n: usize, m: usize, theta: f64, scale: f64) -> u64 {
    ((scale * 2.0 * m as f64 * log_floor(n) / theta).ceil() as u64).max(1)
}

/// Endpoints of sampled edges whose degree is at least `θ`, ascending.
/// Never contains a lower-degree vertex.
pub fn find_high_degree(
    access: &mut GraphAccess<'_>,
    theta: f64,
    scale: f64,
    rng: &mut RandomSource,
) -> Result<Vec<usize>> {
    if !(theta > 0.0) {
        return Err(contract(format!("theta {theta} must be positive")));
    }
    if access.m() == 0 {
        return Ok(Vec::new());
    }
    let samples = high_degree_samples(access.n(), access.m(), theta, scale);
    let mut found = vec![false; access.n()];
    for _ in 0..samples {
        let (u, v) = access.random_edge(rng)?;
        for x in [u, v] {
            if !found[x] && access.degree(x)? as f64 >= theta {
                found[x] = true;
            }
        }
    }
    Ok((0..access.n()).filter(|&v| found[v]).collect())
}

/// Outcome of the light-rooted sampling loop.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LightLoop {
    pub iterations: u64,
    /// Sum of `d(v)` over successful iterations.
    pub total: u64,
    /// `m · total / (2k)`.
    pub estimate: f64,
    /// Increments with `d(v) ≥ θ`: a high-degree vertex missed by the edge sample.
    pub oversized_increments: u64,
}

/// Loop iterations: `ceil(γ · 12 θ m / (ε² T̃))`.
pub fn loop_iterations(m: usize, theta: f64, epsilon: f64, advice: f64, scale: f64) -> u64 {
    ((scale * 12.0 * theta * m as f64 / (epsilon * epsilon * advice)).ceil() as u64).max(1)
}

/// Unbiased estimate of the triangles whose ≺-minimal vertex is outside `high`.
pub fn light_rooted_loop(
    access: &mut GraphAccess<'_>,
    high: &[usize],
    theta: f64,
    iterations: u64,
    rng: &mut RandomSource,
) -> Result<LightLoop> {
    let m = access.m();
    if m == 0 {
        return Err(contract("light-rooted loop on a graph without edges"));
    }
    let mut in_high = vec![false; access.n()];
    for &v in high {
        in_high[v] = true;
    }
    let mut total = 0u64;
    let mut oversized = 0u64;
    for _ in 0..iterations {
        let (u, v) = access.random_edge(rng)?;
        let dv = access.degree(v)?;
        let w = access.neighbor(v, rng.random_range(0..dv))?;
        if in_high[v] || w == u {
            continue;
        }
        let dw = access.degree(w)?;
        if degree_key_less(dv, v, dw, w) && access.pair(u, w)? {
            total += dv as u64;
            if dv as f64 >= theta {
                oversized += 1;
            }
        }
    }
    Ok(LightLoop {
        iterations,
        total,
        estimate: m as f64 * total as f64 / (2.0 * iterations as f64),
        oversized_increments: oversized,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseRun {
    pub value: f64,
    pub theta: f64,
    pub high_degree: Vec<usize>,
    /// Median of the dense counts on `G[V_H]`.
    pub core_estimate: f64,
    pub light: LightLoop,
    /// Queries issued by the sampling loop alone.
    pub loop_ledger: QueryLedger,
    pub ledger: QueryLedger,
    pub max_depth: usize,
}

/// Estimate given advice `T̃`. When `T̃ ≤ T` the result is within `(1±ε)T`
/// with probability at least 4/5.
pub fn estimate_sparse_with_advice(
    g: &Graph,
    epsilon: f64,
    advice: f64,
    params: &SparseParams,
    rng: &RandomSource,
) -> Result<SparseRun> {
    params.validate()?;
    if !(epsilon > 0.0 && epsilon < 1.0) || !(advice > 0.0) {
        return Err(contract(format!(
            "epsilon {epsilon} must be in (0,1), advice {advice} positive"
        )));
    }
    if g.m() == 0 {
        return Ok(SparseRun {
            value: 0.0,
            theta: 0.0,
            high_degree: Vec::new(),
            core_estimate: 0.0,
            light: LightLoop {
                iterations: 0,
                total: 0,
                estimate: 0.0,
                oversized_increments: 0,
            },
            loop_ledger: QueryLedger::default(),
            ledger: QueryLedger::default(),
            max_depth: 0,
        });
    }
    // θ is only defined for advice ≥ 1; the search may probe below that.
    let th = theta(g.m() as f64, advice.max(1.0), epsilon, params.omega())?;

    let mut access = GraphAccess::new(g);
    let high = find_high_degree(&mut access, th, params.scale, &mut rng.derive(0))?;
    let mut ledger = access.ledger();

    let (core, _) = g.induced_subgraph(&high)?;
    let core_error = epsilon * advice / 2.0;
    let mut core_runs = Vec::with_capacity(params.core_width);
    let mut max_depth = 0;
    for i in 0..params.core_width {
        let run = estimate_additive(&core, core_error, advice, &params.dense, &rng.derive(1 + i as u64))?;
        ledger.merge(&run.ledger);
        max_depth = max_depth.max(run.max_depth());
        core_runs.push(run.value);
    }
    let core_estimate = median(core_runs);

    let k = loop_iterations(g.m(), th, epsilon, advice, params.scale);
    let mut loop_access = GraphAccess::new(g);
    let light = light_rooted_loop(&mut loop_access, &high, th, k, &mut rng.derive(1000))?;
    let loop_ledger = loop_access.ledger();
    ledger.merge(&loop_ledger);

    Ok(SparseRun {
        value: core_estimate + light.estimate,
        theta: th,
        high_degree: high,
        core_estimate,
        light,
        loop_ledger,
        ledger,
        max_depth,
    })
}

/// Advice-free `(1±ε)` estimate by the same halving search as the dense counter.
pub fn estimate_sparse(g: &Graph, epsilon: f64, params: &SparseParams, rng: &RandomSource) -> Result<Estimate> {
    params.validate()?;
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(contract(format!("epsilon {epsilon} must be in (0, 1)")));
    }
    let start = Instant::now();
    let width = params.dense.advice_width.unwrap_or_else(|| advice_width(g.n()));
    let mut ledger = QueryLedger::default();
    let mut max_depth = 0;
    let outcome = advice_search(g.n(), width, rng, |advice, level_rng| {
        let run = estimate_sparse_with_advice(g, epsilon, advice, params, level_rng)?;
        ledger.merge(&run.ledger);
        max_depth = max_depth.max(run.max_depth);
        Ok(run.value)
    })?;
    Ok(Estimate {
        algorithm: Algorithm::Sparse,
        value: outcome.value,
        seed: rng.seed(),
        advice_trace: outcome.trace,
        ledger,
        max_depth,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
