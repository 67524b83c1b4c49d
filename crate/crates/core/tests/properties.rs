use proptest::prelude::*;
use tricount::access::GraphAccess;
use tricount::graph::parse_edge_list;
use tricount::kernel::{per_vertex_triangle_counts, triangle_touched_vertices};
use tricount::oracle::{
    brute_triangles, count_light_rooted, count_triangle_pairs, count_triangles_within, list_triangles,
};
use tricount::{count_triangles_exact, estimate_heavy_triangles, gen_gnp, Graph, MatMulConfig, RandomSource};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| gen_gnp(n, p, &mut RandomSource::new(seed)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn kernels_agree_with_oracle(g in graph(128)) {
        let (t, per_vertex) = brute_triangles(&g);
        for cfg in [MatMulConfig::default(), MatMulConfig::strassen()] {
            prop_assert_eq!(count_triangles_exact(&g, &cfg), t);
            prop_assert_eq!(&per_vertex_triangle_counts(&g, &cfg), &per_vertex);
            let touched: Vec<usize> = (0..g.n()).filter(|&v| per_vertex[v] > 0).collect();
            prop_assert_eq!(triangle_touched_vertices(&g, &cfg), touched);
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(60)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn neighbor_and_pair_agree(g in graph(40)) {
        let mut a = GraphAccess::new(&g);
        for v in 0..g.n() {
            let d = a.degree(v).unwrap();
            let mut prev = None;
            for j in 0..d {
                let u = a.neighbor(v, j).unwrap();
                prop_assert!(prev.is_none_or(|p| p < u));
                prop_assert!(a.pair(v, u).unwrap() && a.pair(u, v).unwrap());
                prev = Some(u);
            }
            prop_assert!(a.neighbor(v, d).is_err());
        }
    }

    #[test]
    fn triangle_pairs_partition_all_pairs(g in graph(20)) {
        let ts = list_triangles(&g);
        let t = ts.len() as u64;
        let disjoint = ts.iter().enumerate().map(|(i, x)| {
            ts[i + 1..].iter().filter(|y| {
                [y.0, y.1, y.2].iter().all(|v| ![x.0, x.1, x.2].contains(v))
            }).count() as u64
        }).sum::<u64>();
        let p = count_triangle_pairs(&g);
        prop_assert_eq!(p.diamonds + p.butterflies + disjoint, t * t.saturating_sub(1) / 2);
    }

    #[test]
    fn degree_split_partitions_triangles(g in graph(50), theta in 1usize..20) {
        let high: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= theta).collect();
        let t = brute_triangles(&g).0;
        prop_assert_eq!(count_triangles_within(&g, &high) + count_light_rooted(&g, &high), t);
    }
}

/// Chi-square critical value at significance 1e-3 via the Wilson-Hilferty
/// approximation, accurate to well under 1% for df ≥ 5.
fn chi2_critical(df: f64) -> f64 {
    let z = 3.090_232;
    let k = 2.0 / (9.0 * df);
    df * (1.0 - k + z * k.sqrt()).powi(3)
}

#[test]
fn random_edge_is_uniform_and_oriented() {
    let g = gen_gnp(12, 0.4, &mut RandomSource::new(3)).unwrap();
    let order = g.order();
    let mut a = GraphAccess::new(&g);
    let mut rng = RandomSource::new(4);
    let draws = 40_000;
    let mut counts = vec![0u64; g.m()];
    for _ in 0..draws {
        let (u, v) = a.random_edge(&mut rng).unwrap();
        assert!(order.precedes(v, u));
        let key = (u.min(v), u.max(v));
        counts[g.edges().binary_search(&key).unwrap()] += 1;
    }
    let expected = draws as f64 / g.m() as f64;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    assert!(
        chi2 < chi2_critical((g.m() - 1) as f64),
        "chi2 = {chi2} over {} edges",
        g.m()
    );
    assert_eq!(a.ledger().random_edge, draws);
}

#[test]
fn random_vertex_is_uniform() {
    let g = Graph::empty(25);
    let mut a = GraphAccess::new(&g);
    let mut rng = RandomSource::new(8);
    let mut counts = [0u64; 25];
    for _ in 0..50_000 {
        counts[a.random_vertex(&mut rng).unwrap()] += 1;
    }
    let expected = 2000.0;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    assert!(chi2 < chi2_critical(24.0), "chi2 = {chi2}");
}

#[test]
fn chi2_critical_matches_tables() {
    // Tabulated 0.999 quantiles.
    for (df, q) in [(10.0, 29.588), (24.0, 51.179), (50.0, 86.661)] {
        assert!((chi2_critical(df) - q).abs() / q < 0.01);
    }
}

#[test]
fn heavy_estimate_is_unbiased_at_every_scale() {
    let g = gen_gnp(20, 0.5, &mut RandomSource::new(6)).unwrap();
    let set = vec![1, 5, 8, 13];
    let truth = tricount::oracle::count_triangles_meeting(&g, &set) as f64;
    for scale in [0.01, 0.05, 0.2] {
        let xs: Vec<f64> = (0..600)
            .map(|seed| {
                let mut a = GraphAccess::new(&g);
                estimate_heavy_triangles(&mut a, &set, 10.0, 1.0, scale, &mut RandomSource::new(seed))
                    .unwrap()
                    .value
            })
            .collect();
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let se = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0) / n).sqrt();
        assert!(
            (mean - truth).abs() <= 3.5 * se,
            "scale {scale}: mean {mean}, truth {truth}, se {se}"
        );
    }
}

#[test]
fn estimators_are_reproducible() {
    use tricount::{estimate_dense, estimate_sparse, DenseMode, DenseParams, SparseParams};
    let g = tricount::gen_planted(300, 0.05, 25, &mut RandomSource::new(1)).unwrap();
    let rng = RandomSource::new(42);
    let a = estimate_sparse(&g, 0.5, &SparseParams::default(), &rng).unwrap();
    let b = estimate_sparse(&g, 0.5, &SparseParams::default(), &rng).unwrap();
    assert_eq!(
        (a.value, a.ledger, &a.advice_trace),
        (b.value, b.ledger, &b.advice_trace)
    );
    let p = DenseParams {
        scale: 0.01,
        ..DenseParams::default()
    };
    let a = tricount::estimate_additive(&g, 1e6, 2.0, &p, &rng).unwrap();
    let b = tricount::estimate_additive(&g, 1e6, 2.0, &p, &rng).unwrap();
    assert_eq!(a, b);
    let d = estimate_dense(&g, DenseMode::Relative(0.5), &DenseParams::default(), &rng).unwrap();
    assert_eq!(d.value, count_triangles_exact(&g, &MatMulConfig::default()) as f64);
}
