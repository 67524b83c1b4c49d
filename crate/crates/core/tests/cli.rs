use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tricount::cli::{run, RunResult};
use tricount::oracle::OracleReport;
use tricount::{gen_gnp, Graph, RandomSource};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["tricount"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, g.to_edge_list()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn exact_on_k5() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(dir.path(), "k5.txt", &Graph::complete(5));
    let v = json(&["exact", &k5]);
    assert_eq!(v["algorithm"], "exact");
    assert_eq!(v["estimate"].as_f64(), Some(10.0));
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 10);
}

#[test]
fn dense_on_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    std::fs::write(&path, "").unwrap();
    let v = json(&["dense", path.to_str().unwrap(), "--epsilon", "0.5", "--seed", "1"]);
    assert_eq!(v["estimate"].as_f64(), Some(0.0));
}

#[test]
fn oracle_matches_module() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_gnp(40, 0.3, &mut RandomSource::new(2)).unwrap();
    let file = write(dir.path(), "g.txt", &g);
    let v = json(&["oracle", &file, "--tau", "10"]);
    let r = OracleReport::compute(&g, 10.0);
    assert_eq!(v["T"], r.triangles);
    assert_eq!(v["D"], r.diamonds);
    assert_eq!(v["B"], r.butterflies);
    assert_eq!(v["heavy"], serde_json::to_value(&r.classification.heavy).unwrap());
    assert_eq!(v["light"], serde_json::to_value(&r.classification.light).unwrap());
}

#[test]
fn result_document_round_trips_with_sorted_keys() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_gnp(50, 0.4, &mut RandomSource::new(3)).unwrap();
    let file = write(dir.path(), "g.txt", &g);
    let (_, out, _) = invoke(&["sparse", &file, "--seed", "9", "--with-exact"]);
    let parsed: RunResult = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string(&serde_json::to_value(&parsed).unwrap()).unwrap();
    assert_eq!(again + "\n", out);
    let keys: Vec<String> = serde_json::from_str::<serde_json::Map<String, Value>>(&out)
        .unwrap()
        .keys()
        .cloned()
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn gen_writes_parseable_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let (code, _, _) = invoke(&[
        "gen",
        "--model",
        "planted",
        "--n",
        "50",
        "--p",
        "0.1",
        "--clique",
        "8",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let g = tricount::parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.n(), 50);
    assert!(g.has_edge(0, 7));
    // Without -o the edge list goes to stdout.
    let (_, out, _) = invoke(&["gen", "--n", "10", "--p", "0.5"]);
    assert!(out.starts_with("# n=10"));
}

#[test]
fn output_flag_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k4.txt", &Graph::complete(4));
    let (_, out, _) = invoke(&["exact", &file, "--format", "text"]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("exact: estimate=4 "));
    let target = dir.path().join("r.json");
    let (code, out, _) = invoke(&["exact", &file, "-o", target.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["estimate"].as_f64(), Some(4.0));
}

#[test]
fn with_advice_skips_search() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_gnp(30, 0.5, &mut RandomSource::new(8)).unwrap();
    let file = write(dir.path(), "g.txt", &g);
    let v = json(&["dense-additive", &file, "--A", "100", "--advice", "500"]);
    assert_eq!(v["advice_trace"], serde_json::json!([500.0]));
    assert_eq!(v["A"].as_f64(), Some(100.0));
    let v = json(&["sparse", &file, "--advice", "500", "--omega", "2.5", "--q", "0.2"]);
    assert_eq!(v["params"]["omega"].as_f64(), Some(2.5));
    assert_eq!(v["params"]["q"].as_f64(), Some(0.2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(invoke(&["exact", "/definitely/missing.txt"]).0, 2);
    assert_eq!(invoke(&["dense", "--bogus"]).0, 2);
    assert_eq!(invoke(&["nonsense"]).0, 2);
    assert_eq!(invoke(&[]).0, 2);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n2 x\n").unwrap();
    let (code, _, err) = invoke(&["exact", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let file = write(dir.path(), "k3.txt", &Graph::complete(3));
    assert_eq!(invoke(&["dense", &file, "--q", "0.7"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn bench_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen_gnp(100, 0.5, &mut RandomSource::new(5)).unwrap();
    let file = write(dir.path(), "g.txt", &g);

    let v = json(&["bench", &file, "--seeds", "0"]);
    assert!(v["runs"].as_array().unwrap().is_empty());
    assert!(v["success_fraction"].is_null());

    let v = json(&["bench", &file, "--estimator", "exact", "--seeds", "3"]);
    assert_eq!(v["success_fraction"].as_f64(), Some(1.0));

    let v = json(&[
        "bench",
        &file,
        "--estimator",
        "dense",
        "--seeds",
        "30",
        "--epsilon",
        "0.5",
    ]);
    assert!(v["success_fraction"].as_f64().unwrap() >= 0.66);
    let seeds: Vec<u64> = v["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["seed"].as_u64().unwrap())
        .collect();
    assert_eq!(seeds, (0..30).collect::<Vec<_>>());

    let (code, _, _) = invoke(&["bench", &file, &file, "--truth", "5"]);
    assert_eq!(code, 2);
}

fn scrub(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.retain(|k, _| !k.ends_with("wall_time_ms"));
            map.values_mut().for_each(scrub);
        }
        Value::Array(items) => items.iter_mut().for_each(scrub),
        _ => {}
    }
}

#[test]
fn threaded_bench_matches_sequential() {
    let dir = tempfile::tempdir().unwrap();
    let g = tricount::gen_planted(200, 0.05, 12, &mut RandomSource::new(1)).unwrap();
    let file = write(dir.path(), "g.txt", &g);
    let bench = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_tricount"))
            .args([
                "bench",
                &file,
                "--estimator",
                "sparse",
                "--seeds",
                "6",
                "--seed-start",
                "10",
            ])
            .env("TRICOUNT_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        scrub(&mut v);
        v
    };
    assert_eq!(bench("0"), bench("3"));
}
