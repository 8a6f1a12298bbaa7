use super::{timed, ListingReport, Triangle};
use crate::error::Result;
use crate::graph::Graph;

/// Edge iterator over lists and matrix together.
///
/// For each edge `ij` with `i < j`, scans the adjacency list of the endpoint of
/// lower degree (`i` on ties) and reports `ijk` whenever `j < k` and the matrix
/// has the third edge. Each triangle is reported once, from its smallest edge.
/// `probes` counts scanned (edge, neighbour) pairs and equals `F(G)`.
pub fn list_hybrid(g: &Graph, mut visitor: impl FnMut(Triangle)) -> Result<ListingReport> {
    let matrix = g.require_matrix()?;
    Ok(timed("hybrid", || {
        let mut emitted = 0u64;
        let mut probes = 0u64;
        for (i, j) in g.edges() {
            let (x, y) = if g.degree(i) <= g.degree(j) { (i, j) } else { (j, i) };
            let scan = g.neighbors(x);
            probes += scan.len() as u64;
            for &k in scan {
                if j < k && matrix.contains(y, k) {
                    visitor(Triangle { i, j, k });
                    emitted += 1;
                }
            }
        }
        (emitted, probes)
    }))
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::super::brute_force_list;
    use super::*;
    use crate::error::Error;
    use crate::graph::edge_cost_sum;

    fn collect(g: &Graph) -> (Vec<Triangle>, ListingReport) {
        let g = g.clone().build_matrix().unwrap();
        let mut out = Vec::new();
        let report = list_hybrid(&g, |t| out.push(t)).unwrap();
        out.sort();
        (out, report)
    }

    #[test]
    fn matches_oracle_on_k4() {
        let (ts, report) = collect(&complete(4));
        assert_eq!(ts, brute_force_list(&complete(4)));
        assert_eq!(report.triangles_emitted, 4);
        assert_eq!(report.probes, edge_cost_sum(&complete(4)));
    }

    #[test]
    fn empty_graph_emits_nothing() {
        let (ts, report) = collect(&Graph::empty(5));
        assert!(ts.is_empty());
        assert_eq!(report.triangles_emitted, 0);
    }

    #[test]
    fn requires_matrix() {
        assert_eq!(list_hybrid(&complete(3), |_| {}).unwrap_err(), Error::MatrixMissing);
    }
}
