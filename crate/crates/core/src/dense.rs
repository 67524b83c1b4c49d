//! Recursive triangle estimation for dense graphs.
//!
//! A call with additive error budget `A` and advice `T̃` either counts exactly
//! (small graph, or `A² ≤ (10⁷/q)·T̃`), returns 0 (`T̃ < 1/5`), or splits the
//! graph: triangle-heavy vertices w.r.t. `τ = A²q²/(40000·20T̃)` are found with
//! the detector and their triangles estimated by pair sampling; the rest is
//! subsampled at rate `1/10` and handled by the median of seven recursive calls
//! with budget `(1−q)A/1000` and advice `T̃/1000`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::access::{GraphAccess, QueryLedger};
use crate::detect::detect_amplified;
use crate::error::{contract, Result};
use crate::estimate::{advice_search, advice_width, median, Algorithm, Estimate, ADVICE_FLOOR};
use crate::graph::Graph;
use crate::heavy::estimate_heavy_triangles;
use crate::kernel::{count_triangles_exact, MatMulConfig};
use crate::rng::{bernoulli_subset, RandomSource};

/// Vertex keep rate of the light-side subsample.
pub const LIGHT_SAMPLE_RATE: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenseParams {
    /// Trade-off parameter in `(0, 1/2)`.
    pub q: f64,
    /// Graphs with at most this many vertices are counted exactly.
    pub base_cutoff: usize,
    /// Numerator of the exact-count threshold `A² ≤ (c/q)·T̃`.
    pub exact_threshold: f64,
    /// Recursive executions per call whose median is kept (odd).
    pub median_width: usize,
    /// Executions per advice level; `None` uses [`advice_width`].
    pub advice_width: Option<usize>,
    /// Multiplies heavy-estimator trial counts. 1 keeps the guarantees.
    pub scale: f64,
    pub matmul: MatMulConfig,
}

impl Default for DenseParams {
    fn default() -> Self {
        Self {
            q: 0.1,
            base_cutoff: 8,
            exact_threshold: 1e7,
            median_width: 7,
            advice_width: None,
            scale: 1.0,
            matmul: MatMulConfig::default(),
        }
    }
}

impl DenseParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.q > 0.0 && self.q < 0.5) {
            return Err(contract(format!("q = {} outside (0, 1/2)", self.q)));
        }
        if self.median_width.is_multiple_of(2) || self.advice_width.is_some_and(|w| w.is_multiple_of(2)) {
            return Err(contract("median widths must be odd"));
        }
        if self.base_cutoff < 3 {
            return Err(contract("base_cutoff must be at least 3"));
        }
        if !(self.scale > 0.0) || !(self.exact_threshold > 0.0) {
            return Err(contract("scale and exact_threshold must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameBranch {
    Exact,
    NoTriangles,
    Recursive,
}

/// One call of the recursion, as executed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecursionFrame {
    pub depth: usize,
    pub n: usize,
    pub additive_error: f64,
    pub advice: f64,
    pub branch: FrameBranch,
    /// `20·T̃`; zero outside the recursive branch.
    pub advice_prime: f64,
    pub tau: f64,
    /// `20·sqrt(τ·T̃′)/(q·A)`, which equals 1/10 by the choice of `τ`.
    pub keep_rate: f64,
    pub heavy_vertices: usize,
    pub light_vertices: usize,
    pub heavy_estimate: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AdditiveRun {
    pub value: f64,
    pub frames: Vec<RecursionFrame>,
    pub ledger: QueryLedger,
}

impl AdditiveRun {
    pub fn max_depth(&self) -> usize {
        self.frames.iter().map(|f| f.depth).max().unwrap_or(0)
    }
}

/// Keeps each vertex of `V \ excluded` with probability `p` and returns the
/// induced subgraph with its new-to-old mapping. Draws `X ~ Bin(n, p)` over all
/// of `V`, then drops the excluded ones.
pub fn sample_light_subgraph(
    g: &Graph,
    excluded: &[usize],
    p: f64,
    rng: &mut RandomSource,
) -> Result<(Graph, Vec<usize>)> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(contract(format!("keep probability {p} outside (0, 1]")));
    }
    let mut drop = vec![false; g.n()];
    for &v in excluded {
        if v >= g.n() {
            return Err(contract(format!("vertex {v} outside 0..{}", g.n())));
        }
        drop[v] = true;
    }
    let kept: Vec<usize> = bernoulli_subset(g.n(), p, rng)
        .into_iter()
        .filter(|&v| !drop[v])
        .collect();
    g.induced_subgraph(&kept)
}

/// Estimate within `T ± A` (probability ≥ 4/5 when `T̃ ≥ E[T]`), never
/// overestimating in expectation.
pub fn estimate_additive(
    g: &Graph,
    additive_error: f64,
    advice: f64,
    params: &DenseParams,
    rng: &RandomSource,
) -> Result<AdditiveRun> {
    params.validate()?;
    if !(additive_error > 0.0) || !additive_error.is_finite() {
        return Err(contract(format!("additive error {additive_error} must be positive")));
    }
    if !(advice >= 0.0) {
        return Err(contract(format!("advice {advice} must be non-negative")));
    }
    let mut run = AdditiveRun::default();
    run.value = recurse(g, additive_error, advice, params, rng, 0, &mut run)?;
    Ok(run)
}

fn recurse(
    g: &Graph,
    a: f64,
    advice: f64,
    params: &DenseParams,
    rng: &RandomSource,
    depth: usize,
    run: &mut AdditiveRun,
) -> Result<f64> {
    let mut frame = RecursionFrame {
        depth,
        n: g.n(),
        additive_error: a,
        advice,
        branch: FrameBranch::Exact,
        advice_prime: 0.0,
        tau: 0.0,
        keep_rate: 0.0,
        heavy_vertices: 0,
        light_vertices: 0,
        heavy_estimate: 0.0,
    };
    if g.n() <= params.base_cutoff || a * a <= params.exact_threshold / params.q * advice {
        run.frames.push(frame);
        return Ok(count_triangles_exact(g, &params.matmul) as f64);
    }
    if advice < ADVICE_FLOOR {
        frame.branch = FrameBranch::NoTriangles;
        run.frames.push(frame);
        return Ok(0.0);
    }

    let q = params.q;
    let advice_prime = 20.0 * advice;
    let tau = a * a * q * q / (40_000.0 * advice_prime);
    frame.branch = FrameBranch::Recursive;
    frame.advice_prime = advice_prime;
    frame.tau = tau;
    frame.keep_rate = 20.0 * (tau * advice_prime).sqrt() / (q * a);

    let heavy = detect_amplified(g, tau, &params.matmul, &rng.derive(0), &mut run.ledger)?;
    let eps_heavy = (q * a / (2.0 * advice_prime)).min(1.0);
    let mut access = GraphAccess::new(g);
    let heavy_est = estimate_heavy_triangles(&mut access, &heavy, tau, eps_heavy, params.scale, &mut rng.derive(1))?;
    run.ledger.merge(&access.ledger());

    let p = LIGHT_SAMPLE_RATE;
    let (light, _) = sample_light_subgraph(g, &heavy, p, &mut rng.derive(2))?;
    frame.heavy_vertices = heavy.len();
    frame.light_vertices = light.n();
    frame.heavy_estimate = heavy_est.value;
    run.frames.push(frame);

    let p3 = p * p * p;
    let child_a = (1.0 - q) * p3 * a;
    let child_advice = advice * p3;
    let mut children = Vec::with_capacity(params.median_width);
    for i in 0..params.median_width {
        children.push(recurse(
            &light,
            child_a,
            child_advice,
            params,
            &rng.derive(3 + i as u64),
            depth + 1,
            run,
        )?);
    }
    Ok(heavy_est.value + median(children) / p3)
}

/// `(1±ε)`-estimate when `T ≤ T̃ ≤ 2T`: the additive call with `A = εT̃/2`.
pub fn estimate_relative_with_advice(
    g: &Graph,
    epsilon: f64,
    advice: f64,
    params: &DenseParams,
    rng: &RandomSource,
) -> Result<AdditiveRun> {
    if !(epsilon > 0.0) || !(advice > 0.0) {
        return Err(contract(format!(
            "epsilon {epsilon} and advice {advice} must be positive"
        )));
    }
    estimate_additive(g, epsilon * advice / 2.0, advice, params, rng)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DenseMode {
    Relative(f64),
    Additive(f64),
}

/// Advice-free estimate: geometric search over `T̃` from `C(n, 3)` down.
pub fn estimate_dense(g: &Graph, mode: DenseMode, params: &DenseParams, rng: &RandomSource) -> Result<Estimate> {
    params.validate()?;
    let (algorithm, bad) = match mode {
        DenseMode::Relative(e) => (Algorithm::Dense, !(e > 0.0)),
        DenseMode::Additive(a) => (Algorithm::DenseAdditive, !(a > 0.0)),
    };
    if bad {
        return Err(contract(format!("{mode:?}: error parameter must be positive")));
    }
    let start = Instant::now();
    let width = params.advice_width.unwrap_or_else(|| advice_width(g.n()));
    let mut ledger = QueryLedger::default();
    let mut max_depth = 0;
    let outcome = advice_search(g.n(), width, rng, |advice, level_rng| {
        let run = match mode {
            DenseMode::Relative(e) => estimate_relative_with_advice(g, e, advice, params, level_rng)?,
            DenseMode::Additive(a) => estimate_additive(g, a, advice, params, level_rng)?,
        };
        ledger.merge(&run.ledger);
        max_depth = max_depth.max(run.max_depth());
        Ok(run.value)
    })?;
    Ok(Estimate {
        algorithm,
        value: outcome.value,
        seed: rng.seed(),
        advice_trace: outcome.trace,
        ledger,
        max_depth,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_gnp;
    use crate::oracle::brute_triangles;

    #[test]
    fn small_graphs_count_exactly() {
        let g = Graph::complete(7);
        let run = estimate_additive(&g, 1.0, 1000.0, &DenseParams::default(), &RandomSource::new(0)).unwrap();
        assert_eq!(run.value, 35.0);
        assert_eq!(run.frames.len(), 1);
        assert_eq!(run.frames[0].branch, FrameBranch::Exact);
    }

    #[test]
    fn tiny_advice_returns_zero() {
        let g = gen_gnp(30, 0.5, &mut RandomSource::new(1)).unwrap();
        let params = DenseParams::default();
        // A² = 1e8 > (1e7 / 0.1) * 0.1 = 1e7, so the exact branch is skipped.
        let run = estimate_additive(&g, 1e4, 0.1, &params, &RandomSource::new(0)).unwrap();
        assert_eq!(run.value, 0.0);
        assert_eq!(run.frames[0].branch, FrameBranch::NoTriangles);
    }

    #[test]
    fn parameter_validation() {
        let g = Graph::complete(4);
        let rng = RandomSource::new(0);
        assert!(estimate_additive(&g, 0.0, 1.0, &DenseParams::default(), &rng).is_err());
        let bad_q = DenseParams {
            q: 0.5,
            ..DenseParams::default()
        };
        assert!(estimate_additive(&g, 1.0, 1.0, &bad_q, &rng).is_err());
        let even = DenseParams {
            median_width: 6,
            ..DenseParams::default()
        };
        assert!(estimate_additive(&g, 1.0, 1.0, &even, &rng).is_err());
        assert!(estimate_dense(&g, DenseMode::Relative(0.0), &DenseParams::default(), &rng).is_err());
    }

    #[test]
    fn light_sample_edges() {
        let g = gen_gnp(20, 0.4, &mut RandomSource::new(3)).unwrap();
        let mut rng = RandomSource::new(0);
        let (same, map) = sample_light_subgraph(&g, &[], 1.0, &mut rng).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, (0..20).collect::<Vec<_>>());
        let all: Vec<usize> = (0..20).collect();
        let (none, _) = sample_light_subgraph(&g, &all, 0.5, &mut rng).unwrap();
        assert_eq!(none.n(), 0);
        assert!(sample_light_subgraph(&g, &[], 0.0, &mut rng).is_err());
    }

    #[test]
    fn recursive_branch_frames() {
        // T̃ = 1 and A = 2·10⁴ clear the exact threshold (4·10⁸ > 10⁸) on a graph
        // well above the base cutoff, forcing one split.
        let g = gen_gnp(40, 0.5, &mut RandomSource::new(7)).unwrap();
        let params = DenseParams {
            scale: 0.01,
            ..DenseParams::default()
        };
        let run = estimate_additive(&g, 2e4, 1.0, &params, &RandomSource::new(5)).unwrap();
        let top = &run.frames[0];
        assert_eq!(top.branch, FrameBranch::Recursive);
        assert!((top.keep_rate - 0.1).abs() < 1e-12);
        assert_eq!(run.frames.len(), 1 + params.median_width);
        assert!(run.frames[1..].iter().all(|f| f.depth == 1));
        assert!(run.value >= 0.0);
    }

    #[test]
    fn dense_search_on_small_graphs() {
        let params = DenseParams::default();
        let rng = RandomSource::new(1);
        let empty = estimate_dense(&Graph::empty(10), DenseMode::Relative(0.5), &params, &rng).unwrap();
        assert_eq!(empty.value, 0.0);
        let k6 = estimate_dense(&Graph::complete(6), DenseMode::Relative(0.5), &params, &rng).unwrap();
        assert_eq!(k6.value, 20.0);
        assert_eq!(k6.advice_trace, vec![20.0]);

        let g = gen_gnp(40, 0.3, &mut RandomSource::new(2)).unwrap();
        let truth = brute_triangles(&g).0 as f64;
        let est = estimate_dense(&g, DenseMode::Additive(5.0), &params, &rng).unwrap();
        assert_eq!(est.value, truth);
        assert_eq!(est.algorithm, Algorithm::DenseAdditive);
    }

    #[test]
    fn deterministic_per_seed() {
        let g = gen_gnp(30, 0.5, &mut RandomSource::new(4)).unwrap();
        let params = DenseParams {
            scale: 0.01,
            ..DenseParams::default()
        };
        let a = estimate_additive(&g, 2e4, 1.0, &params, &RandomSource::new(9)).unwrap();
        let b = estimate_additive(&g, 2e4, 1.0, &params, &RandomSource::new(9)).unwrap();
        assert_eq!(a, b);
    }
}
