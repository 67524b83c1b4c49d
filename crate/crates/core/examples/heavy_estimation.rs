// Unbiased count of triangles meeting a vertex set, by random vertex pairs.

use tricount::heavy::heavy_trials;
use tricount::oracle::count_triangles_meeting;
use tricount::{estimate_heavy_triangles, gen_gnp, GraphAccess, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_gnp(30, 0.5, &mut RandomSource::new(1))?;
    let set: Vec<usize> = (0..10).collect();
    let (tau, eps, scale) = (40.0, 0.5, 0.05);
    let truth = count_triangles_meeting(&g, &set);
    println!("{} trials per vertex", heavy_trials(g.n(), tau, eps, scale));

    let runs = 200;
    let mut sum = 0.0;
    for seed in 0..runs {
        let mut access = GraphAccess::new(&g);
        let e = estimate_heavy_triangles(&mut access, &set, tau, eps, scale, &mut RandomSource::new(seed))?;
        sum += e.value;
    }
    println!("truth {truth}, mean of {runs} runs {:.1}", sum / runs as f64);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
