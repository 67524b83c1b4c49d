//! Unbiased estimate of the number of triangles meeting a vertex set `V_H`.
//!
//! Each triangle meeting `V_H` spreads one unit of charge evenly over its
//! `V_H` vertices. For every `v ∈ V_H` we sample ordered pairs `(u, w)` with
//! replacement; a triangle `{u, v, w}` with `ℓ` vertices in `V_H` adds
//! `n² / (2kℓ)`. Each triangle through `v` is hit by two ordered pairs, so the
//! expected per-vertex total is exactly `v`'s charge.

use serde::{Deserialize, Serialize};

use crate::access::GraphAccess;
use crate::error::{contract, Result};
use crate::rng::RandomSource;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeavyEstimate {
    pub value: f64,
    /// `(v, T̂_v)` for each vertex of the (deduplicated, sorted) set.
    pub contributions: Vec<(usize, f64)>,
    pub trials_per_vertex: u64,
    pub epsilon: f64,
    pub tau: f64,
}

/// `max(ln n, 1)`.
pub fn log_floor(n: usize) -> f64 {
    (n.max(1) as f64).ln().max(1.0)
}

/// `ceil(γ · 360 n² ln*(n) / (ε² τ))` with `ε` clamped to at most 1.
pub fn heavy_trials(n: usize, tau: f64, epsilon: f64, scale: f64) -> u64 {
    let eps = epsilon.min(1.0);
    let k = scale * 360.0 * (n as f64).powi(2) * log_floor(n) / (eps * eps * tau);
    (k.ceil() as u64).max(1)
}

pub fn estimate_heavy_triangles(
    access: &mut GraphAccess<'_>,
    heavy: &[usize],
    tau: f64,
    epsilon: f64,
    scale: f64,
    rng: &mut RandomSource,
) -> Result<HeavyEstimate> {
    if !(tau > 0.0) || !(epsilon > 0.0) || !(scale > 0.0) {
        return Err(contract(format!(
            "heavy estimate needs tau, epsilon, scale > 0 (got {tau}, {epsilon}, {scale})"
        )));
    }
    let n = access.n();
    let mut set = heavy.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(contract(format!("vertex {v} outside 0..{n}")));
    }
    let mut member = vec![false; n];
    for &v in &set {
        member[v] = true;
    }

    let trials = heavy_trials(n, tau, epsilon, scale);
    let weight = (n as f64).powi(2) / (2.0 * trials as f64);
    let mut contributions = Vec::with_capacity(set.len());
    let mut value = 0.0;
    for &v in &set {
        // Hits split by ℓ, so the sum is exact and order-independent.
        let mut hits = [0u64; 4];
        for _ in 0..trials {
            let u = access.random_vertex(rng)?;
            let w = access.random_vertex(rng)?;
            if u == v || w == v || u == w {
                continue;
            }
            if access.pair(v, u)? && access.pair(v, w)? && access.pair(u, w)? {
                hits[1 + member[u] as usize + member[w] as usize] += 1;
            }
        }
        let charge = hits[1] as f64 + hits[2] as f64 / 2.0 + hits[3] as f64 / 3.0;
        let estimate = weight * charge;
        value += estimate;
        contributions.push((v, estimate));
    }

    Ok(HeavyEstimate {
        value,
        contributions,
        trials_per_vertex: trials,
        epsilon: epsilon.min(1.0),
        tau,
    })
}
