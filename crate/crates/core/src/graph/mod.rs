//! Immutable undirected simple graphs in compressed sparse row form.

mod matrix;
mod queue;
mod stats;

pub use matrix::{BitMatrix, WORD_BITS};
pub(crate) use queue::MinDegreeQueue;
pub use stats::{degeneracy, edge_cost_sum, Degeneracy, GraphStats};

use crate::error::{Error, Result};

/// Largest vertex count for which an adjacency matrix is built unless overridden.
pub const DEFAULT_MATRIX_BUDGET: usize = 1 << 17;

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are stored back to back and each is strictly increasing.
/// An optional [`BitMatrix`] mirrors the edge set for constant-time probes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    matrix: Option<BitMatrix>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            matrix: None,
        }
    }

    /// Builds a graph from undirected edge pairs.
    ///
    /// Repeated pairs and both orientations of the same edge collapse to one
    /// edge. When `n` is `None` the vertex count is one past the largest id seen.
    pub fn from_edge_list<I>(n: Option<usize>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        let mut max_id = None::<usize>;
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if let Some(n) = n {
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::VertexOutOfRange { vertex: x, n });
                    }
                }
            }
            max_id = max_id.max(Some(u.max(v)));
            pairs.push((u, v));
        }
        let n = n.unwrap_or_else(|| max_id.map_or(0, |x| x + 1));

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut buckets: Vec<Vec<usize>> = degree.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in &pairs {
            buckets[u].push(v);
            buckets[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * pairs.len());
        offsets.push(0);
        for mut list in buckets {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Ok(Self {
            offsets,
            targets,
            matrix: None,
        })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edge membership test: a bit probe when the matrix is present, binary search otherwise.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.matrix {
            Some(m) => m.contains(u, v),
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let nbrs = self.neighbors(u);
            let start = nbrs.partition_point(|&v| v <= u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn to_edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn matrix(&self) -> Option<&BitMatrix> {
        self.matrix.as_ref()
    }

    pub fn has_matrix(&self) -> bool {
        self.matrix.is_some()
    }

    pub(crate) fn require_matrix(&self) -> Result<&BitMatrix> {
        self.matrix.as_ref().ok_or(Error::MatrixMissing)
    }

    /// Attaches the bit-packed adjacency matrix using [`DEFAULT_MATRIX_BUDGET`].
    pub fn build_matrix(self) -> Result<Self> {
        self.build_matrix_with_budget(DEFAULT_MATRIX_BUDGET)
    }

    /// Attaches the adjacency matrix, refusing graphs with more than `budget` vertices.
    /// Calling this on a graph that already carries a matrix is a no-op.
    pub fn build_matrix_with_budget(mut self, budget: usize) -> Result<Self> {
        if self.matrix.is_some() {
            return Ok(self);
        }
        let n = self.n();
        if n > budget {
            return Err(Error::MatrixTooLarge { n, budget });
        }
        let mut matrix = BitMatrix::new(n);
        for (u, v) in self.edges() {
            matrix.set_symmetric(u, v);
        }
        self.matrix = Some(matrix);
        Ok(self)
    }

    /// Copy of this graph with a matrix attached, borrowing when one is already present.
    pub fn with_matrix(&self, budget: usize) -> Result<std::borrow::Cow<'_, Graph>> {
        use std::borrow::Cow;
        if self.has_matrix() {
            Ok(Cow::Borrowed(self))
        } else {
            Ok(Cow::Owned(self.clone().build_matrix_with_budget(budget)?))
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in increasing original id.
    ///
    /// The second component maps each new id back to its original id.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut mapping = vertices.to_vec();
        if let Some(&bad) = mapping.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        mapping.sort_unstable();
        mapping.dedup();

        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in mapping.iter().enumerate() {
            new_id[v] = i;
        }
        let mut offsets = Vec::with_capacity(mapping.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in &mapping {
            // original lists are sorted and the relabelling is monotone
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| new_id[w])
                    .filter(|&w| w != usize::MAX),
            );
            offsets.push(targets.len());
        }
        Ok((
            Graph {
                offsets,
                targets,
                matrix: None,
            },
            mapping,
        ))
    }

    /// Checks every structural invariant. Used by tests and `verify`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.n();
        for u in 0..n {
            let nbrs = self.neighbors(u);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {u} not strictly increasing"));
            }
            for &v in nbrs {
                if v >= n {
                    return Err(format!("neighbour {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop on {u}"));
                }
                if self.neighbors(v).binary_search(&u).is_err() {
                    return Err(format!("edge {u}-{v} not symmetric"));
                }
            }
        }
        if !self.targets.len().is_multiple_of(2) {
            return Err("odd adjacency total".into());
        }
        if let Some(m) = &self.matrix {
            for u in 0..n {
                for v in 0..n {
                    if m.contains(u, v) != self.neighbors(u).binary_search(&v).is_ok() {
                        return Err(format!("matrix bit ({u},{v}) disagrees with lists"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edge_list(Some(n), edges).unwrap()
    }

    #[test]
    fn path_construction() {
        let g = Graph::from_edge_list(Some(3), [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(Some(3), [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::from_edge_list(None, [(2, 2)]), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::from_edge_list(Some(2), [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn inferred_vertex_count() {
        assert_eq!(Graph::from_edge_list(None, []).unwrap().n(), 0);
        assert_eq!(Graph::from_edge_list(None, [(4, 1)]).unwrap().n(), 5);
    }

    #[test]
    fn induced_k3_from_k4() {
        let (h, map) = complete(4).induced_subgraph(&[2, 0, 1]).unwrap();
        assert_eq!(h, complete(3));
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn induced_empty_and_out_of_range() {
        let (h, map) = complete(4).induced_subgraph(&[]).unwrap();
        assert_eq!((h.n(), h.m()), (0, 0));
        assert!(map.is_empty());
        assert!(matches!(
            complete(4).induced_subgraph(&[7]),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn matrix_of_path() {
        let g = Graph::from_edge_list(Some(3), [(0, 1), (1, 2)])
            .unwrap()
            .build_matrix()
            .unwrap();
        let m = g.matrix().unwrap();
        let set: Vec<_> = (0..3)
            .flat_map(|u| (0..3).map(move |v| (u, v)))
            .filter(|&(u, v)| m.contains(u, v))
            .collect();
        assert_eq!(set, vec![(0, 1), (1, 0), (1, 2), (2, 1)]);
        // idempotent
        assert_eq!(g.clone().build_matrix().unwrap(), g);
    }

    #[test]
    fn matrix_of_empty_graph_is_zero() {
        let g = Graph::empty(4).build_matrix().unwrap();
        let m = g.matrix().unwrap();
        assert!((0..4).all(|u| m.row(u).iter().all(|&w| w == 0)));
    }

    #[test]
    fn matrix_budget_enforced() {
        assert_eq!(
            Graph::empty(200_000).build_matrix().unwrap_err(),
            Error::MatrixTooLarge {
                n: 200_000,
                budget: DEFAULT_MATRIX_BUDGET
            }
        );
        assert!(Graph::empty(10).build_matrix_with_budget(9).is_err());
        assert!(Graph::empty(10).build_matrix_with_budget(10).is_ok());
    }
}
