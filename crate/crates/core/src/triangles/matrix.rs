use super::{timed, ListingReport, Triangle};
use crate::error::Result;
use crate::graph::Graph;

/// Exact count as `Σ_{ij ∈ E} |N(i) ∩ N(j)| / 3`, intersecting bit rows by popcount.
pub fn count_matrix(g: &Graph) -> Result<u64> {
    let matrix = g.require_matrix()?;
    let total: u64 = g.edges().map(|(u, v)| matrix.common_count(u, v)).sum();
    debug_assert_eq!(total % 3, 0);
    Ok(total / 3)
}

/// Some triangle, if any: the first edge in lexicographic order whose rows
/// intersect, closed by the smallest common neighbour.
pub fn detect_matrix(g: &Graph) -> Result<Option<Triangle>> {
    let matrix = g.require_matrix()?;
    Ok(g.edges()
        .find_map(|(u, v)| matrix.first_common(u, v).map(|w| Triangle::new(u, v, w))))
}

/// Lists every triangle `ijk` from edge `ij` by walking the set bits above `j`
/// in the AND of rows `i` and `j`. `probes` counts word ANDs.
pub fn list_matrix(g: &Graph, mut visitor: impl FnMut(Triangle)) -> Result<ListingReport> {
    let matrix = g.require_matrix()?;
    Ok(timed("matrix", || {
        let mut emitted = 0u64;
        let mut probes = 0u64;
        let words = matrix.words_per_row() as u64;
        for (i, j) in g.edges() {
            probes += words;
            matrix.for_each_common_after(i, j, j, |k| {
                visitor(Triangle { i, j, k });
                emitted += 1;
            });
        }
        (emitted, probes)
    }))
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;
    use crate::error::Error;

    fn with_matrix(g: Graph) -> Graph {
        g.build_matrix().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_matrix(&with_matrix(complete(5))).unwrap(), 10);
        assert_eq!(count_matrix(&with_matrix(cycle(6))).unwrap(), 0);
        assert_eq!(count_matrix(&with_matrix(Graph::empty(0))).unwrap(), 0);
    }

    #[test]
    fn detection() {
        assert_eq!(detect_matrix(&with_matrix(cycle(5))).unwrap(), None);
        assert_eq!(
            detect_matrix(&with_matrix(complete(3))).unwrap(),
            Some(Triangle::new(0, 1, 2))
        );
        assert_eq!(detect_matrix(&complete(3)), Err(Error::MatrixMissing));
        assert_eq!(count_matrix(&complete(3)), Err(Error::MatrixMissing));
    }

    #[test]
    fn listing_over_word_boundaries() {
        let g = with_matrix(complete(70));
        let mut count = 0u64;
        let report = list_matrix(&g, |t| {
            assert!(t.i < t.j && t.j < t.k);
            count += 1;
        })
        .unwrap();
        assert_eq!(count, 70 * 69 * 68 / 6);
        assert_eq!(report.triangles_emitted, count);
    }
}
