// The recursive dense estimator, with and without advice.

use tricount::dense::FrameBranch;
use tricount::{
    count_triangles_exact, estimate_additive, estimate_dense, gen_gnp, DenseMode, DenseParams, MatMulConfig,
    RandomSource,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_gnp(100, 0.5, &mut RandomSource::new(5))?;
    let truth = count_triangles_exact(&g, &MatMulConfig::default());
    let params = DenseParams::default();

    let e = estimate_dense(&g, DenseMode::Relative(0.5), &params, &RandomSource::new(1))?;
    println!(
        "relative: {} (truth {truth}), {} advice levels",
        e.value,
        e.advice_trace.len()
    );

    let e = estimate_dense(&g, DenseMode::Additive(2000.0), &params, &RandomSource::new(1))?;
    println!("additive +-2000: {}", e.value);

    // A loose budget with small advice takes the recursive branch: heavy
    // vertices are estimated by sampling, the rest recursed on a 10% sample.
    let g = gen_gnp(600, 0.03, &mut RandomSource::new(4))?;
    let quick = DenseParams {
        scale: 0.01,
        ..DenseParams::default()
    };
    let run = estimate_additive(&g, 4e8, 1e6, &quick, &RandomSource::new(2))?;
    let recursive = run.frames.iter().filter(|f| f.branch == FrameBranch::Recursive).count();
    println!(
        "forced recursion: value {:.0} (truth {}), {recursive} recursive frames, depth {}",
        run.value,
        count_triangles_exact(&g, &MatMulConfig::default()),
        run.max_depth()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
