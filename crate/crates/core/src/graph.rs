//! Immutable undirected simple graphs.
//!
//! Adjacency is stored CSR-style: one offsets array and one flat, per-vertex
//! ascending neighbor array. The flat edge list (`u < v`) backs uniform edge
//! sampling. Vertex ids are dense `0..n`.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{contract, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate and reversed edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(contract(format!("self-loop on vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(contract(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            pairs.push(if u < v { (u, v) } else { (v, u) });
        }
        Ok(Self::from_canonical(n, pairs))
    }

    /// `pairs` must already satisfy `u < v < n`; duplicates are allowed.
    pub(crate) fn from_canonical(n: usize, mut pairs: Vec<(usize, usize)>) -> Graph {
        pairs.sort_unstable();
        pairs.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0usize; offsets[n]];
        // Pairs are sorted by (u, v), so every list fills in ascending order:
        // a vertex x receives its smaller neighbors (as v) before its larger ones (as u).
        for &(u, v) in &pairs {
            neighbors[cursor[u]] = v;
            cursor[u] += 1;
        }
        for &(u, v) in &pairs {
            neighbors[cursor[v]] = u;
            cursor[v] += 1;
        }
        for x in 0..n {
            neighbors[offsets[x]..offsets[x + 1]].sort_unstable();
        }

        Graph {
            offsets,
            neighbors,
            edges: pairs,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_canonical(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn order(&self) -> DegreeOrder<'_> {
        DegreeOrder { graph: self }
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the order given.
    /// Returns the new graph and the new-to-old id mapping. Repeated ids are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut local = vec![usize::MAX; self.n()];
        let mut mapping = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= self.n() {
                return Err(contract(format!("vertex {v} outside 0..{}", self.n())));
            }
            if local[v] == usize::MAX {
                local[v] = mapping.len();
                mapping.push(v);
            }
        }
        let mut pairs = Vec::new();
        for (i, &v) in mapping.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    pairs.push((i, j));
                }
            }
        }
        Ok((Self::from_canonical(mapping.len(), pairs), mapping))
    }

    /// Vertex-disjoint union; `other`'s ids are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let pairs = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_canonical(self.n() + other.n(), pairs)
    }

    /// Edge-list text with a `# n=<n> m=<m>` header so isolated vertices survive a reload.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.m() * 12 + 32);
        let _ = writeln!(out, "# n={} m={}", self.n(), self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Total order `u ≺ v` iff `(d(u), u) < (d(v), v)`.
#[derive(Clone, Copy, Debug)]
pub struct DegreeOrder<'g> {
    graph: &'g Graph,
}

impl DegreeOrder<'_> {
    pub fn cmp(&self, u: usize, v: usize) -> Ordering {
        (self.graph.degree(u), u).cmp(&(self.graph.degree(v), v))
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.cmp(u, v) == Ordering::Less
    }

    /// The ≺-minimal vertex of a triangle.
    pub fn min_of(&self, a: usize, b: usize, c: usize) -> usize {
        let ab = if self.precedes(a, b) { a } else { b };
        if self.precedes(ab, c) {
            ab
        } else {
            c
        }
    }
}

/// Compares by `(degree, id)` given already-known degrees.
pub(crate) fn degree_key_less(du: usize, u: usize, dv: usize, v: usize) -> bool {
    (du, u) < (dv, v)
}

/// Parses the edge-list format: one `u v` pair per line, whitespace separated,
/// `#` starts a comment, ids are 0-indexed. `n` is one more than the largest id,
/// unless a `# n=<count>` header asks for more.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n_header, raw) = scan_edge_list(text.lines().map(|l| Ok(l.to_string())))?;
    let max_id = raw.iter().map(|&(u, v)| u.max(v)).max();
    let n_edges = max_id.map_or(0, |m| m as usize + 1);
    let n = n_header.unwrap_or(0).max(n_edges);
    let pairs = raw
        .into_iter()
        .map(|(u, v)| {
            let (u, v) = (u as usize, v as usize);
            if u < v {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Ok(Graph::from_canonical(n, pairs))
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut text = String::new();
    for line in reader.lines() {
        text.push_str(&line?);
        text.push('\n');
    }
    parse_edge_list(&text)
}

/// Like [`parse_edge_list`] but relabels the ids that actually occur to `0..k`
/// in ascending order. Returns the graph and the new-to-original id mapping.
pub fn parse_edge_list_compact(text: &str) -> Result<(Graph, Vec<u64>)> {
    let (_, raw) = scan_edge_list(text.lines().map(|l| Ok(l.to_string())))?;
    let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let local = |x: u64| ids.binary_search(&x).unwrap();
    let pairs = raw
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (local(u), local(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let graph = Graph::from_canonical(ids.len(), pairs);
    Ok((graph, ids))
}

type RawEdges = (Option<usize>, Vec<(u64, u64)>);

fn scan_edge_list<I>(lines: I) -> Result<RawEdges>
where
    I: IntoIterator<Item = Result<String>>,
{
    let mut header = None;
    let mut raw = Vec::new();
    for (idx, line) in lines.into_iter().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let (body, comment) = match line.find('#') {
            Some(pos) => (&line[..pos], Some(&line[pos + 1..])),
            None => (line.as_str(), None),
        };
        if let Some(c) = comment {
            if let Some(n) = parse_header(c) {
                header = Some(header.map_or(n, |h: usize| h.max(n)));
            }
        }
        let mut fields = body.split_whitespace();
        let Some(first) = fields.next() else { continue };
        let second = fields.next().ok_or_else(|| Error::Parse {
            line: lineno,
            reason: "expected two vertex ids".into(),
        })?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                reason: "trailing fields after edge".into(),
            });
        }
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("`{s}` is not a non-negative integer"),
            })
        };
        let (u, v) = (parse(first)?, parse(second)?);
        if u == v {
            return Err(Error::SelfLoop {
                line: lineno,
                vertex: u,
            });
        }
        raw.push((u, v));
    }
    Ok((header, raw))
}

fn parse_header(comment: &str) -> Option<usize> {
    comment
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("n="))
        .and_then(|s| s.parse().ok())
}
