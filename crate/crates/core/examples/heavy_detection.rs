// Finding triangle-heavy vertices by sampled matrix products, with majority
// voting over independent rounds.

use tricount::detect::{amplification_rounds, detect_once_matmul, DetectorParams};
use tricount::oracle::classify;
use tricount::{detect_amplified, gen_planted, MatMulConfig, QueryLedger, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gen_planted(200, 0.02, 15, &mut RandomSource::new(5))?;
    let tau = 30.0;
    let truth = classify(&g, tau);
    let params = DetectorParams::new(tau, g.n())?;
    println!("{params:?}, {} rounds", amplification_rounds(g.n()));

    let cfg = MatMulConfig::default();
    let once = detect_once_matmul(&g, tau, &cfg, &mut RandomSource::new(1))?;
    println!("one round reported {} vertices", once.len());

    let mut ledger = QueryLedger::default();
    let heavy = detect_amplified(&g, tau, &cfg, &RandomSource::new(1), &mut ledger)?;
    println!("amplified: {heavy:?}");
    assert!(truth.heavy.iter().all(|v| heavy.contains(v)));
    assert!(truth.light.iter().all(|v| !heavy.contains(v)));

    // Above n the detector switches to per-vertex pair sampling.
    let sampled = detect_amplified(&g, 250.0, &cfg, &RandomSource::new(1), &mut ledger)?;
    println!("tau = 250: {} reported, {} pair queries", sampled.len(), ledger.pair);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
