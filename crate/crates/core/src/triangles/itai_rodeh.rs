use std::collections::VecDeque;

use super::{timed, ListingReport, Triangle};
use crate::graph::Graph;

const NO_PARENT: usize = usize::MAX;

/// Spanning-forest rounds.
///
/// Each round builds a BFS spanning forest of the remaining edges (roots taken
/// in increasing id), lists the triangles through every tree edge by merging
/// the endpoints' remaining neighbour lists, and deletes the tree edges.
/// A triangle seen through several tree edges in the same round is reported
/// only from its lexicographically smallest tree edge; deleted edges cannot
/// reappear, so later rounds never repeat it.
pub fn list_itai_rodeh(g: &Graph, mut visitor: impl FnMut(Triangle)) -> ListingReport {
    timed("itai_rodeh", || {
        let n = g.n();
        let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let mut remaining = g.m();
        let mut parent = vec![NO_PARENT; n];
        let mut visited = vec![false; n];
        let mut queue = VecDeque::new();
        let mut tree_edges = Vec::new();
        let mut emitted = 0u64;
        let mut probes = 0u64;

        while remaining > 0 {
            parent.fill(NO_PARENT);
            visited.fill(false);
            tree_edges.clear();
            for root in 0..n {
                if visited[root] || adj[root].is_empty() {
                    continue;
                }
                visited[root] = true;
                queue.push_back(root);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if !visited[y] {
                            visited[y] = true;
                            parent[y] = x;
                            tree_edges.push((x.min(y), x.max(y)));
                            queue.push_back(y);
                        }
                    }
                }
            }
            let is_tree = |a: usize, b: usize| parent[a] == b || parent[b] == a;

            tree_edges.sort_unstable();
            for &(a, b) in &tree_edges {
                let (la, lb) = (&adj[a], &adj[b]);
                let (mut p, mut q) = (0, 0);
                while p < la.len() && q < lb.len() {
                    probes += 1;
                    match la[p].cmp(&lb[q]) {
                        std::cmp::Ordering::Less => p += 1,
                        std::cmp::Ordering::Greater => q += 1,
                        std::cmp::Ordering::Equal => {
                            let t = Triangle::new(a, b, la[p]);
                            let [i, j, k] = t.vertices();
                            let smallest_tree_edge = [(i, j), (i, k), (j, k)]
                                .into_iter()
                                .find(|&(x, y)| is_tree(x, y))
                                .expect("(a, b) is a tree edge of t");
                            if smallest_tree_edge == (a, b) {
                                visitor(t);
                                emitted += 1;
                            }
                            p += 1;
                            q += 1;
                        }
                    }
                }
            }

            for (v, list) in adj.iter_mut().enumerate() {
                list.retain(|&w| !is_tree(v, w));
            }
            remaining -= tree_edges.len();
        }
        (emitted, probes)
    })
}

#[cfg(test)]
mod tests {
    use super::super::brute_force_list;
    use super::super::test_graphs::*;
    use super::*;

    fn collect(g: &Graph) -> Vec<Triangle> {
        let mut out = Vec::new();
        list_itai_rodeh(g, |t| out.push(t));
        out.sort();
        out
    }

    #[test]
    fn single_triangle_reported_once() {
        assert_eq!(collect(&complete(3)), vec![Triangle::new(0, 1, 2)]);
    }

    #[test]
    fn small_families() {
        assert_eq!(collect(&complete(4)), brute_force_list(&complete(4)));
        assert_eq!(collect(&complete(9)), brute_force_list(&complete(9)));
        assert!(collect(&complete_bipartite(4, 5)).is_empty());
        assert!(collect(&Graph::empty(3)).is_empty());
    }
}
