use super::{timed, ListingReport, Triangle};
use crate::graph::Graph;

/// Vertex iterator with neighbour marking.
///
/// Vertices are processed by non-increasing degree (smallest id on ties). For
/// the current vertex `u`, its remaining neighbours are marked; then for each
/// marked `v`, every remaining neighbour `w` of `v` that is also marked closes
/// the triangle `uvw`, after which `v` is unmarked. `u` is then considered
/// deleted.
///
/// Deletion never touches `g`: each vertex gets a copy of its adjacency sorted
/// by processing rank, and a cursor skips the already-deleted prefix, so every
/// scan only pays for the live part of a list.
pub fn list_chiba_nishizeki(g: &Graph, mut visitor: impl FnMut(Triangle)) -> ListingReport {
    timed("chiba_nishizeki", || {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut rank = vec![0usize; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        // pushing in rank order leaves each list sorted by rank
        let mut ranked: Vec<Vec<usize>> = (0..n).map(|v| Vec::with_capacity(g.degree(v))).collect();
        for &u in &order {
            for &w in g.neighbors(u) {
                ranked[w].push(u);
            }
        }

        let mut cursor = vec![0usize; n];
        let mut marked = vec![false; n];
        let mut emitted = 0u64;
        let mut probes = 0u64;

        fn live<'a>(ranked: &'a [Vec<usize>], cursor: &mut [usize], rank: &[usize], x: usize, r: usize) -> &'a [usize] {
            let list = &ranked[x];
            while cursor[x] < list.len() && rank[list[cursor[x]]] <= r {
                cursor[x] += 1;
            }
            &list[cursor[x]..]
        }

        for (r, &u) in order.iter().enumerate() {
            let nu = live(&ranked, &mut cursor, &rank, u, r);
            for &v in nu {
                marked[v] = true;
            }
            for &v in nu {
                let nv = live(&ranked, &mut cursor, &rank, v, r);
                probes += nv.len() as u64;
                for &w in nv {
                    if marked[w] {
                        visitor(Triangle::new(u, v, w));
                        emitted += 1;
                    }
                }
                marked[v] = false;
            }
        }
        (emitted, probes)
    })
}
