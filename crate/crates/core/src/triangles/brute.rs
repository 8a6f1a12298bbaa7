use super::Triangle;
use crate::graph::Graph;

/// Every triangle, found by testing all `C(n, 3)` vertex triples.
///
/// Cubic in `n`; meant as a reference oracle for small graphs.
pub fn brute_force_list(g: &Graph) -> Vec<Triangle> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ij = g.has_edge(i, j);
            for k in j + 1..n {
                if ij && g.has_edge(i, k) && g.has_edge(j, k) {
                    out.push(Triangle { i, j, k });
                }
            }
        }
    }
    out
}
