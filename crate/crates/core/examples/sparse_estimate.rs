// The degree-split estimator: edge sampling for triangles rooted at low-degree
// vertices, the dense estimator on the high-degree core.

use tricount::oracle::count_light_rooted;
use tricount::sparse::theta;
use tricount::{
    count_triangles_exact, estimate_sparse, estimate_sparse_with_advice, gen_planted, MatMulConfig, RandomSource,
    SparseParams,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_planted(1500, 0.008, 150, &mut RandomSource::new(9))?;
    let truth = count_triangles_exact(&g, &MatMulConfig::default());
    let params = SparseParams::default();
    println!(
        "m = {}, T = {truth}, theta = {:.1}",
        g.m(),
        theta(g.m() as f64, truth as f64, 0.5, 3.0)?
    );

    let run = estimate_sparse_with_advice(&g, 0.5, truth as f64, &params, &RandomSource::new(1))?;
    println!(
        "with advice: {:.0} = core {:.0} + light {:.1} (oracle light {}), {} high-degree vertices",
        run.value,
        run.core_estimate,
        run.light.estimate,
        count_light_rooted(&g, &run.high_degree),
        run.high_degree.len()
    );

    let e = estimate_sparse(&g, 0.5, &params, &RandomSource::new(1))?;
    println!(
        "advice search: {:.0} after {} levels, {} queries",
        e.value,
        e.advice_trace.len(),
        e.ledger.total()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
