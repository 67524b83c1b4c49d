//! Exact triangle counting through the square of the adjacency matrix.
//!
//! Two kernels compute `A²` over integers: a cubic one working on bit-packed
//! rows (`A²[u][v] = popcount(row_u & row_v)`) and a recursive Strassen kernel
//! over `i64` blocks. Both produce identical products.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kernel {
    Cubic,
    RecursiveSubcubic,
}

/// Which kernel runs, and the exponent value the estimators plug into their
/// parameter formulas. `omega` is configuration; it is not measured from the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatMulConfig {
    pub kernel: Kernel,
    pub omega: f64,
    pub cutoff: usize,
}

/// log2(7), the exponent of the recursive kernel.
pub const STRASSEN_OMEGA: f64 = 2.807_354_922_057_604;

impl Default for MatMulConfig {
    fn default() -> Self {
        Self {
            kernel: Kernel::Cubic,
            omega: 3.0,
            cutoff: 64,
        }
    }
}

impl MatMulConfig {
    pub fn strassen() -> Self {
        Self {
            kernel: Kernel::RecursiveSubcubic,
            omega: STRASSEN_OMEGA,
            cutoff: 64,
        }
    }
}

/// Symmetric 0/1 matrix with zero diagonal, one contiguous bit row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseAdjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DenseAdjacency {
    fn zeroed(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut a = Self::zeroed(g.n());
        for &(u, v) in g.edges() {
            a.set(u, v);
        }
        a
    }

    /// Adjacency of `G[vertices]`, rows in the order of `vertices` (distinct ids).
    pub fn induced(g: &Graph, vertices: &[usize]) -> Self {
        let mut a = Self::zeroed(vertices.len());
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if g.has_edge(vertices[i], vertices[j]) {
                    a.set(i, j);
                }
            }
        }
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    fn row_ones(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

/// Dense `n × n` integer product, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    n: usize,
    data: Vec<u32>,
}

impl Product {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }
}

const PARALLEL_ROWS: usize = 256;

/// `A²` with the configured kernel.
pub fn square(a: &DenseAdjacency, cfg: &MatMulConfig) -> Product {
    match cfg.kernel {
        Kernel::Cubic => square_bitwise(a),
        Kernel::RecursiveSubcubic => square_strassen(a, cfg.cutoff.max(1)),
    }
}

fn square_bitwise(a: &DenseAdjacency) -> Product {
    let n = a.n;
    let mut data = vec![0u32; n * n];
    let fill = |u: usize, out: &mut [u32]| {
        let ru = a.row(u);
        for (v, slot) in out.iter_mut().enumerate() {
            *slot = ru.iter().zip(a.row(v)).map(|(x, y)| (x & y).count_ones()).sum();
        }
    };
    if n >= PARALLEL_ROWS {
        data.par_chunks_mut(n).enumerate().for_each(|(u, out)| fill(u, out));
    } else {
        data.chunks_mut(n.max(1)).enumerate().for_each(|(u, out)| fill(u, out));
    }
    Product { n, data }
}

fn square_strassen(a: &DenseAdjacency, cutoff: usize) -> Product {
    let n = a.n;
    let mut size = 1;
    while size < n {
        size *= 2;
    }
    let mut m = vec![0i64; size * size];
    for u in 0..n {
        for v in a.row_ones(u) {
            m[u * size + v] = 1;
        }
    }
    let full = strassen(&m, &m, size, cutoff);
    let mut data = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            data[u * n + v] = full[u * size + v] as u32;
        }
    }
    Product { n, data }
}

fn naive_mul(x: &[i64], y: &[i64], s: usize) -> Vec<i64> {
    let mut out = vec![0i64; s * s];
    for i in 0..s {
        for k in 0..s {
            let xik = x[i * s + k];
            if xik == 0 {
                continue;
            }
            let (row, yk) = (&mut out[i * s..(i + 1) * s], &y[k * s..(k + 1) * s]);
            for (o, &yv) in row.iter_mut().zip(yk) {
                *o += xik * yv;
            }
        }
    }
    out
}

fn quadrant(m: &[i64], s: usize, qi: usize, qj: usize) -> Vec<i64> {
    let h = s / 2;
    let mut out = Vec::with_capacity(h * h);
    for i in 0..h {
        let start = (qi * h + i) * s + qj * h;
        out.extend_from_slice(&m[start..start + h]);
    }
    out
}

fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Strassen product of two `s × s` matrices, `s` a power of two.
fn strassen(x: &[i64], y: &[i64], s: usize, cutoff: usize) -> Vec<i64> {
    if s <= cutoff || s == 1 {
        return naive_mul(x, y, s);
    }
    let h = s / 2;
    let (a11, a12, a21, a22) = (
        quadrant(x, s, 0, 0),
        quadrant(x, s, 0, 1),
        quadrant(x, s, 1, 0),
        quadrant(x, s, 1, 1),
    );
    let (b11, b12, b21, b22) = (
        quadrant(y, s, 0, 0),
        quadrant(y, s, 0, 1),
        quadrant(y, s, 1, 0),
        quadrant(y, s, 1, 1),
    );

    let m1 = strassen(&add(&a11, &a22), &add(&b11, &b22), h, cutoff);
    let m2 = strassen(&add(&a21, &a22), &b11, h, cutoff);
    let m3 = strassen(&a11, &sub(&b12, &b22), h, cutoff);
    let m4 = strassen(&a22, &sub(&b21, &b11), h, cutoff);
    let m5 = strassen(&add(&a11, &a12), &b22, h, cutoff);
    let m6 = strassen(&sub(&a21, &a11), &add(&b11, &b12), h, cutoff);
    let m7 = strassen(&sub(&a12, &a22), &add(&b21, &b22), h, cutoff);

    let mut out = vec![0i64; s * s];
    for i in 0..h {
        for j in 0..h {
            let k = i * h + j;
            out[i * s + j] = m1[k] + m4[k] - m5[k] + m7[k];
            out[i * s + h + j] = m3[k] + m5[k];
            out[(h + i) * s + j] = m2[k] + m4[k];
            out[(h + i) * s + h + j] = m1[k] - m2[k] + m3[k] + m6[k];
        }
    }
    out
}

/// `trace(A³) / 6`.
pub fn count_triangles_exact(g: &Graph, cfg: &MatMulConfig) -> u64 {
    count_in(&DenseAdjacency::from_graph(g), cfg)
}

pub(crate) fn count_in(a: &DenseAdjacency, cfg: &MatMulConfig) -> u64 {
    let a2 = square(a, cfg);
    let trace: u64 = (0..a.n)
        .map(|u| a.row_ones(u).map(|v| a2.get(u, v) as u64).sum::<u64>())
        .sum();
    trace / 6
}

/// `T_v = (A³)_{vv} / 2` for every vertex.
pub fn per_vertex_triangle_counts(g: &Graph, cfg: &MatMulConfig) -> Vec<u64> {
    let a = DenseAdjacency::from_graph(g);
    let a2 = square(&a, cfg);
    (0..a.n)
        .map(|v| a.row_ones(v).map(|u| a2.get(v, u) as u64).sum::<u64>() / 2)
        .collect()
}

/// Vertices lying in at least one triangle: `v` such that some neighbor `u`
/// has `A²[v][u] ≥ 1`.
pub fn triangle_touched_vertices(g: &Graph, cfg: &MatMulConfig) -> Vec<usize> {
    touched_in(&DenseAdjacency::from_graph(g), cfg)
}

/// Local (row) indices of touched vertices, ascending.
pub(crate) fn touched_in(a: &DenseAdjacency, cfg: &MatMulConfig) -> Vec<usize> {
    if a.n < 3 {
        return Vec::new();
    }
    let a2 = square(a, cfg);
    (0..a.n).filter(|&v| a.row_ones(v).any(|u| a2.get(v, u) >= 1)).collect()
}
