// Exact triangle counts from A²: total, per vertex, and triangle-touched vertices.

use tricount::kernel::{per_vertex_triangle_counts, triangle_touched_vertices};
use tricount::{count_triangles_exact, gen_gnp, Graph, MatMulConfig, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k5 = Graph::complete(5);
    let cubic = MatMulConfig::default();
    println!("K5: T = {}", count_triangles_exact(&k5, &cubic));

    let g = gen_gnp(200, 0.2, &mut RandomSource::new(11))?;
    let strassen = MatMulConfig::strassen();
    let t = count_triangles_exact(&g, &cubic);
    assert_eq!(t, count_triangles_exact(&g, &strassen));
    let per_vertex = per_vertex_triangle_counts(&g, &strassen);
    assert_eq!(per_vertex.iter().sum::<u64>(), 3 * t);
    println!(
        "G(200, 0.2): T = {t}, max T_v = {}",
        per_vertex.iter().max().unwrap_or(&0)
    );

    // A pendant edge hanging off a triangle is not touched.
    let tail = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])?;
    println!("touched: {:?}", triangle_touched_vertices(&tail, &cubic));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
