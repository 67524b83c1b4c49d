// Brute-force ground truth: T, diamonds, butterflies, heavy/light split.

use tricount::oracle::count_light_rooted;
use tricount::{gen_planted, OracleReport, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_planted(120, 0.05, 10, &mut RandomSource::new(2))?;
    let r = OracleReport::compute(&g, 20.0);
    println!(
        "T = {}, D = {}, B = {}, heavy = {:?}, light = {}, neither = {}",
        r.triangles,
        r.diamonds,
        r.butterflies,
        r.classification.heavy,
        r.classification.light.len(),
        r.classification.neither.len()
    );
    let tau = *r.per_vertex.iter().max().unwrap_or(&0) as f64;
    assert!((r.diamonds + r.butterflies) as f64 <= 1.5 * tau * r.triangles as f64);

    // Triangles whose ≺-lowest vertex avoids the heavy set.
    println!(
        "rooted outside heavy set: {}",
        count_light_rooted(&g, &r.classification.heavy)
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
