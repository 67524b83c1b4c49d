// Driving the command-line front end in-process.

use tricount::cli::{run, RunResult};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("tricount-cli-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let file = dir.join("g.txt");
    let file = file.to_str().ok_or("non-utf8 temp path")?;

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        ["tricount", "gen", "--n", "80", "--p", "0.3", "--seed", "1", "-o", file],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);

    out.clear();
    run(
        ["tricount", "dense", file, "--seed", "4", "--with-exact"],
        &mut out,
        &mut err,
    );
    let result: RunResult = serde_json::from_slice(&out)?;
    println!(
        "{} estimate {} exact {:?}",
        result.algorithm, result.estimate, result.exact
    );

    out.clear();
    run(
        [
            "tricount",
            "bench",
            file,
            "--estimator",
            "sparse",
            "--seeds",
            "5",
            "--format",
            "text",
        ],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8(out)?);

    let code = run(["tricount", "exact", "/no/such/file"], &mut Vec::new(), &mut err);
    println!("missing file exits with {code}");
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
