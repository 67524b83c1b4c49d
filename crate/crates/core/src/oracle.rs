//! Brute-force ground truth: triangles by adjacency intersection, diamonds and
//! butterflies by pairing triangles, heavy/light classification.
//!
//! Everything here is exhaustive and meant for small graphs.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// All triangles as `(a, b, c)` with `a < b < c`, in lexicographic order.
pub fn list_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if nu[i] > v {
                        out.push((u, v, nu[i]));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

/// `(T, T_v)`.
pub fn brute_triangles(g: &Graph) -> (u64, Vec<u64>) {
    let mut per_vertex = vec![0u64; g.n()];
    let triangles = list_triangles(g);
    for &(a, b, c) in &triangles {
        per_vertex[a] += 1;
        per_vertex[b] += 1;
        per_vertex[c] += 1;
    }
    (triangles.len() as u64, per_vertex)
}

/// Triangle pairs grouped by how many vertices they share.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePairs {
    /// Unordered pairs sharing an edge; one diamond subgraph each.
    pub diamonds: u64,
    /// Unordered pairs sharing exactly one vertex; one butterfly subgraph each.
    pub butterflies: u64,
}

/// Counts (not necessarily induced) diamonds and butterflies by enumerating,
/// at every vertex, the pairs of triangles through it.
pub fn count_triangle_pairs(g: &Graph) -> TrianglePairs {
    let triangles = list_triangles(g);
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(a, b, c)) in triangles.iter().enumerate() {
        through[a].push(i);
        through[b].push(i);
        through[c].push(i);
    }
    let verts = |t: usize| {
        let (a, b, c) = triangles[t];
        [a, b, c]
    };
    let mut pairs = TrianglePairs::default();
    for (x, list) in through.iter().enumerate() {
        for (i, &s) in list.iter().enumerate() {
            let vs = verts(s);
            for &t in &list[i + 1..] {
                let shared: Vec<usize> = verts(t).into_iter().filter(|w| vs.contains(w)).collect();
                match shared.len() {
                    1 => pairs.butterflies += 1,
                    // Seen once per shared vertex; keep the sighting at the smaller one.
                    2 if shared[0].min(shared[1]) == x => pairs.diamonds += 1,
                    _ => {}
                }
            }
        }
    }
    pairs
}

pub fn count_diamonds(g: &Graph) -> u64 {
    count_triangle_pairs(g).diamonds
}

pub fn count_butterflies(g: &Graph) -> u64 {
    count_triangle_pairs(g).butterflies
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub heavy: Vec<usize>,
    pub light: Vec<usize>,
    pub neither: Vec<usize>,
}

/// Heavy: `T_v ≥ τ`. Light: `T_v ≤ τ/20`. Everything else is neither.
pub fn classify_counts(per_vertex: &[u64], tau: f64) -> Classification {
    let mut c = Classification::default();
    for (v, &t) in per_vertex.iter().enumerate() {
        let t = t as f64;
        if t >= tau {
            c.heavy.push(v);
        } else if t <= tau / 20.0 {
            c.light.push(v);
        } else {
            c.neither.push(v);
        }
    }
    c
}

pub fn classify(g: &Graph, tau: f64) -> Classification {
    classify_counts(&brute_triangles(g).1, tau)
}

/// Triangles with at least one vertex in `set`.
pub fn count_triangles_meeting(g: &Graph, set: &[usize]) -> u64 {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    list_triangles(g)
        .into_iter()
        .filter(|&(a, b, c)| member[a] || member[b] || member[c])
        .count() as u64
}

/// Triangles whose ≺-minimal vertex lies outside `set`.
pub fn count_light_rooted(g: &Graph, set: &[usize]) -> u64 {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    let order = g.order();
    list_triangles(g)
        .into_iter()
        .filter(|&(a, b, c)| !member[order.min_of(a, b, c)])
        .count() as u64
}

/// Triangles with all three vertices in `set`.
pub fn count_triangles_within(g: &Graph, set: &[usize]) -> u64 {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    list_triangles(g)
        .into_iter()
        .filter(|&(a, b, c)| member[a] && member[b] && member[c])
        .count() as u64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub triangles: u64,
    pub per_vertex: Vec<u64>,
    pub diamonds: u64,
    pub butterflies: u64,
    pub tau: f64,
    pub classification: Classification,
}

impl OracleReport {
    pub fn compute(g: &Graph, tau: f64) -> Self {
        let (triangles, per_vertex) = brute_triangles(g);
        let pairs = count_triangle_pairs(g);
        let classification = classify_counts(&per_vertex, tau);
        Self {
            triangles,
            per_vertex,
            diamonds: pairs.diamonds,
            butterflies: pairs.butterflies,
            tau,
            classification,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_triangle_counts() {
        assert_eq!(brute_triangles(&Graph::complete(4)), (4, vec![3, 3, 3, 3]));
        assert_eq!(brute_triangles(&bowtie()), (2, vec![1, 1, 2, 1, 1]));
        assert_eq!(brute_triangles(&cycle(5)).0, 0);
    }

    #[test]
    fn diamond_and_butterfly_identities() {
        assert_eq!(
            count_triangle_pairs(&diamond()),
            TrianglePairs {
                diamonds: 1,
                butterflies: 0
            }
        );
        assert_eq!(
            count_triangle_pairs(&bowtie()),
            TrianglePairs {
                diamonds: 0,
                butterflies: 1
            }
        );
        // Every pair of K4's four triangles shares an edge.
        assert_eq!(
            count_triangle_pairs(&Graph::complete(4)),
            TrianglePairs {
                diamonds: 6,
                butterflies: 0
            }
        );
    }

    #[test]
    fn k5_pairs_by_hand() {
        // K5 has 10 triangles, C(10,2) = 45 pairs. Two triangles in 5 vertices
        // share at least one vertex. Pairs sharing an edge: 10 edges * C(3,2) = 30.
        let p = count_triangle_pairs(&Graph::complete(5));
        assert_eq!(
            p,
            TrianglePairs {
                diamonds: 30,
                butterflies: 15
            }
        );
    }

    #[test]
    fn classification() {
        let k10 = Graph::complete(10).disjoint_union(&Graph::empty(100));
        let c = classify(&k10, 10.0);
        assert_eq!(c.heavy, (0..10).collect::<Vec<_>>());
        assert_eq!(c.light, (10..110).collect::<Vec<_>>());
        assert!(c.neither.is_empty());

        let c = classify(&Graph::complete(4), 3.0);
        assert_eq!(c.heavy.len(), 4);
        assert!(c.light.is_empty());

        let c = classify(&Graph::complete(4), 61.0);
        assert!(c.heavy.is_empty());
        assert_eq!(c.light.len(), 4);
    }

    #[test]
    fn set_attributed_counts() {
        let g = bowtie();
        assert_eq!(count_triangles_meeting(&g, &[]), 0);
        assert_eq!(count_triangles_meeting(&g, &[0]), 1);
        assert_eq!(count_triangles_meeting(&g, &[2]), 2);
        assert_eq!(count_triangles_within(&g, &[0, 1, 2]), 1);
        // Degrees 2,2,4,2,2: each wing's minimum is its lower-id wing vertex.
        assert_eq!(count_light_rooted(&g, &[]), 2);
        assert_eq!(count_light_rooted(&g, &[0]), 1);
        assert_eq!(count_light_rooted(&g, &[0, 3]), 0);
    }

    #[test]
    fn report_fields() {
        let r = OracleReport::compute(&diamond(), 2.0);
        assert_eq!((r.triangles, r.diamonds, r.butterflies), (2, 1, 0));
        assert_eq!(r.classification.heavy, vec![1, 2]);
    }
}
