//! Seeded random graph generators.

use rand::Rng;

use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::rng::RandomSource;

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(contract(format!("edge probability {p} outside [0, 1]")))
    }
}

/// Erdős–Rényi G(n, p): each of the C(n, 2) pairs independently with probability `p`.
pub fn gen_gnp(n: usize, p: f64, rng: &mut RandomSource) -> Result<Graph> {
    check_probability(p)?;
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Ok(Graph::from_canonical(n, pairs))
}

/// G(n, p) with a clique overlaid on vertices `0..clique_size`.
pub fn gen_planted(n: usize, p: f64, clique_size: usize, rng: &mut RandomSource) -> Result<Graph> {
    if clique_size > n {
        return Err(contract(format!("clique of {clique_size} vertices in a graph of {n}")));
    }
    let background = gen_gnp(n, p, rng)?;
    let mut pairs = background.edges().to_vec();
    for u in 0..clique_size {
        for v in u + 1..clique_size {
            pairs.push((u, v));
        }
    }
    Ok(Graph::from_canonical(n, pairs))
}
