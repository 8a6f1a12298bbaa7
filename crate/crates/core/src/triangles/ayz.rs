use super::{list_matrix, timed, ListingReport, Triangle};
use crate::error::Result;
use crate::graph::{Graph, DEFAULT_MATRIX_BUDGET};

/// `⌈√m⌉`, the degree threshold used when none is given.
pub fn default_threshold(m: usize) -> usize {
    let r = m.isqrt();
    if r * r == m {
        r
    } else {
        r + 1
    }
}

/// Degree-split listing with the default matrix budget.
pub fn list_ayz(g: &Graph, threshold: Option<usize>, visitor: impl FnMut(Triangle)) -> Result<ListingReport> {
    list_ayz_with_budget(g, threshold, DEFAULT_MATRIX_BUDGET, visitor)
}

/// Degree-split listing.
///
/// A vertex is low when its degree is at most `threshold` (default `⌈√m⌉`).
/// Triangles with a low vertex are found by testing neighbour pairs of low
/// vertices and reported only from their smallest low vertex. Triangles whose
/// vertices are all high are listed by the matrix method on the subgraph
/// induced by the high vertices, so the two passes are disjoint.
pub fn list_ayz_with_budget(
    g: &Graph,
    threshold: Option<usize>,
    matrix_budget: usize,
    mut visitor: impl FnMut(Triangle),
) -> Result<ListingReport> {
    let threshold = threshold.unwrap_or_else(|| default_threshold(g.m()));
    let low: Vec<bool> = (0..g.n()).map(|v| g.degree(v) <= threshold).collect();
    let high: Vec<usize> = (0..g.n()).filter(|&v| !low[v]).collect();
    let (h, mapping) = g.induced_subgraph(&high)?;
    let h = h.build_matrix_with_budget(matrix_budget)?;

    let mut report = timed("ayz", || {
        let mut emitted = 0u64;
        let mut probes = 0u64;
        for v in (0..g.n()).filter(|&v| low[v]) {
            let nbrs = g.neighbors(v);
            for (p, &a) in nbrs.iter().enumerate() {
                if low[a] && a < v {
                    continue;
                }
                for &b in &nbrs[p + 1..] {
                    if low[b] && b < v {
                        continue;
                    }
                    probes += 1;
                    if g.has_edge(a, b) {
                        visitor(Triangle::new(v, a, b));
                        emitted += 1;
                    }
                }
            }
        }
        (emitted, probes)
    });

    let high_report = list_matrix(&h, |t| {
        visitor(Triangle::new(mapping[t.i], mapping[t.j], mapping[t.k]))
    })?;
    report.triangles_emitted += high_report.triangles_emitted;
    report.probes += high_report.probes;
    report.elapsed += high_report.elapsed;
    Ok(report)
}
