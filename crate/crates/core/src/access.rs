//! The query model: degree, i-th neighbor, pair, uniform vertex and uniform
//! edge queries, each one counted in a [`QueryLedger`].

use std::ops::{Add, AddAssign};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::rng::RandomSource;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryLedger {
    pub degree: u64,
    pub neighbor: u64,
    pub pair: u64,
    pub random_vertex: u64,
    pub random_edge: u64,
}

impl QueryLedger {
    pub fn total(&self) -> u64 {
        self.degree + self.neighbor + self.pair + self.random_vertex + self.random_edge
    }

    pub fn merge(&mut self, other: &QueryLedger) {
        *self += *other;
    }
}

impl AddAssign for QueryLedger {
    fn add_assign(&mut self, o: QueryLedger) {
        self.degree += o.degree;
        self.neighbor += o.neighbor;
        self.pair += o.pair;
        self.random_vertex += o.random_vertex;
        self.random_edge += o.random_edge;
    }
}

impl Add for QueryLedger {
    type Output = QueryLedger;

    fn add(mut self, o: QueryLedger) -> QueryLedger {
        self += o;
        self
    }
}

impl std::iter::Sum for QueryLedger {
    fn sum<I: Iterator<Item = QueryLedger>>(iter: I) -> QueryLedger {
        iter.fold(QueryLedger::default(), Add::add)
    }
}

/// Instrumented view of a [`Graph`]. Each query bumps its counter by one,
/// including queries that fail their precondition check.
#[derive(Debug)]
pub struct GraphAccess<'g> {
    graph: &'g Graph,
    ledger: QueryLedger,
}

impl<'g> GraphAccess<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            ledger: QueryLedger::default(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn ledger(&self) -> QueryLedger {
        self.ledger
    }

    pub fn into_ledger(self) -> QueryLedger {
        self.ledger
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.graph.n() {
            Ok(())
        } else {
            Err(contract(format!("vertex {v} outside 0..{}", self.graph.n())))
        }
    }

    pub fn degree(&mut self, v: usize) -> Result<usize> {
        self.ledger.degree += 1;
        self.check_vertex(v)?;
        Ok(self.graph.degree(v))
    }

    /// The `j`-th smallest neighbor of `v`.
    pub fn neighbor(&mut self, v: usize, j: usize) -> Result<usize> {
        self.ledger.neighbor += 1;
        self.check_vertex(v)?;
        self.graph
            .neighbors(v)
            .get(j)
            .copied()
            .ok_or_else(|| contract(format!("neighbor index {j} >= degree {} of {v}", self.graph.degree(v))))
    }

    pub fn pair(&mut self, u: usize, v: usize) -> Result<bool> {
        self.ledger.pair += 1;
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(contract(format!("pair query on identical vertices {u}")));
        }
        Ok(self.graph.has_edge(u, v))
    }

    pub fn random_vertex(&mut self, rng: &mut RandomSource) -> Result<usize> {
        self.ledger.random_vertex += 1;
        if self.graph.n() == 0 {
            return Err(contract("random vertex query on an empty vertex set"));
        }
        Ok(rng.random_range(0..self.graph.n()))
    }

    /// A uniform edge returned as `(u, v)` with `u ≻ v` in degree order.
    pub fn random_edge(&mut self, rng: &mut RandomSource) -> Result<(usize, usize)> {
        self.ledger.random_edge += 1;
        if self.graph.m() == 0 {
            return Err(contract("random edge query on a graph without edges"));
        }
        let (a, b) = self.graph.edges()[rng.random_range(0..self.graph.m())];
        Ok(if self.graph.order().precedes(a, b) {
            (b, a)
        } else {
            (a, b)
        })
    }
}
