//! Degree statistics, the edge cost sum `F(G)`, and degeneracy peeling.

use num_rational::Ratio;

use super::{Graph, MinDegreeQueue, WORD_BITS};

/// `F(G)`: the sum over edges of the smaller endpoint degree.
///
/// This is exactly the number of neighbour probes an edge iterator makes when
/// it always scans the lower-degree endpoint.
pub fn edge_cost_sum(g: &Graph) -> u64 {
    g.edges()
        .map(|(u, v)| g.degree(u).min(g.degree(v)) as u64)
        .sum()
}

/// Result of min-degree peeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    /// Largest degree seen at removal time.
    pub degeneracy: usize,
    /// Vertices in removal order.
    pub order: Vec<usize>,
}

impl Degeneracy {
    /// `rank[v]` is the position of `v` in the peeling order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            rank[v] = i;
        }
        rank
    }
}

/// Repeatedly removes a vertex of minimum current degree (smallest id on ties).
///
/// Orienting each edge from the earlier to the later endpoint leaves every
/// vertex with at most `degeneracy` out-neighbours.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let mut queue = MinDegreeQueue::new(g.degrees());
    let mut order = Vec::with_capacity(g.n());
    let mut d = 0;
    while let Some((v, deg)) = queue.pop_min() {
        d = d.max(deg);
        order.push(v);
        for &w in g.neighbors(v) {
            if !queue.is_removed(w) {
                queue.decrement(w);
            }
        }
    }
    Degeneracy {
        degeneracy: d,
        order,
    }
}

/// Summary parameters of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// Exact average degree `2m/n` (zero for the empty vertex set).
    pub avg_degree: Ratio<u64>,
    pub edge_cost_sum: u64,
    pub degeneracy: usize,
    pub degeneracy_order: Vec<usize>,
    /// `max(⌈(d+1)/2⌉, ⌈m/(n-1)⌉)`, or 0 without edges.
    pub arboricity_lower: usize,
    /// The degeneracy `d`.
    pub arboricity_upper: usize,
    pub word_bits: usize,
}

impl GraphStats {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let m = g.m();
        let degrees = g.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let avg_degree = if n == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(2 * m as u64, n as u64)
        };
        let Degeneracy { degeneracy, order } = degeneracy(g);
        let arboricity_lower = if m == 0 {
            0
        } else {
            (degeneracy + 1).div_ceil(2).max(m.div_ceil(n - 1))
        };
        Self {
            n,
            m,
            degrees,
            max_degree,
            avg_degree,
            edge_cost_sum: edge_cost_sum(g),
            degeneracy,
            degeneracy_order: order,
            arboricity_lower,
            arboricity_upper: degeneracy,
            word_bits: WORD_BITS,
        }
    }
}
