// Edge-list files: parsing, writing, and compacting sparse vertex ids.

use tricount::graph::{parse_edge_list, parse_edge_list_compact};
use tricount::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = "# a triangle plus an isolated vertex\n# n=4\n0 1\n1 2\n2 0\n1 0\n";
    let g = parse_edge_list(text)?;
    println!("n = {}, m = {} (duplicates collapse)", g.n(), g.m());
    assert_eq!((g.n(), g.m()), (4, 3));

    let written = g.to_edge_list();
    print!("{written}");
    assert_eq!(parse_edge_list(&written)?, g);

    let (compact, ids) = parse_edge_list_compact("1000 7\n7 99\n")?;
    println!("compacted to n = {}, original ids {ids:?}", compact.n());

    match parse_edge_list("0 1\n3 3\n") {
        Err(Error::SelfLoop { line, vertex }) => println!("self-loop on vertex {vertex} at line {line}"),
        other => return Err(format!("expected a self-loop error, got {other:?}").into()),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
