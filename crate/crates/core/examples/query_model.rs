// Reading a graph only through the five counted queries.

use tricount::{Graph, GraphAccess, RandomSource};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Bowtie: two triangles sharing vertex 2.
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let mut access = GraphAccess::new(&g);
    let mut rng = RandomSource::new(7);

    let d = access.degree(2)?;
    let first = access.neighbor(2, 0)?;
    println!(
        "deg(2) = {d}, first neighbor {first}, pair(0,3) = {}",
        access.pair(0, 3)?
    );

    for _ in 0..3 {
        let v = access.random_vertex(&mut rng)?;
        // Endpoints come back with the ≺-larger one first.
        let (u, w) = access.random_edge(&mut rng)?;
        println!("random vertex {v}, random edge ({u}, {w})");
    }

    // Out-of-range requests are errors but still counted.
    assert!(access.neighbor(0, 9).is_err());
    let ledger = access.ledger();
    println!("{ledger:?}, total {}", ledger.total());
    assert_eq!(ledger.neighbor, 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
