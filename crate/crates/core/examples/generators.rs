// Seeded random graphs: G(n, p) and G(n, p) with a planted clique.

use tricount::kernel::count_triangles_exact;
use tricount::{gen_gnp, gen_planted, MatMulConfig, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = MatMulConfig::default();
    let a = gen_gnp(100, 0.1, &mut RandomSource::new(3))?;
    let b = gen_gnp(100, 0.1, &mut RandomSource::new(3))?;
    assert_eq!(a, b);
    // Expected triangle count is C(100,3)·p³ ≈ 162.
    println!("G(100, 0.1): m = {}, T = {}", a.m(), count_triangles_exact(&a, &cfg));

    let planted = gen_planted(300, 0.02, 20, &mut RandomSource::new(3))?;
    println!(
        "G(300, 0.02) + K20 on 0..20: m = {}, T = {}, deg(0) = {}",
        planted.m(),
        count_triangles_exact(&planted, &cfg),
        planted.degree(0)
    );
    assert!((0..20).all(|u| (u + 1..20).all(|v| planted.has_edge(u, v))));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
