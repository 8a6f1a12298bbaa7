//! Independent sets, and the "large independent set or a triangle" dichotomy.

use serde::{Deserialize, Serialize};

use crate::combinatorics::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::{Graph, MinDegreeQueue};
use crate::triangles::Triangle;

/// Turán bound `⌈n / (2m/n + 1)⌉ = ⌈n² / (n + 2m)⌉`; 0 for the empty graph.
pub fn turan_bound(n: usize, m: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let (n, m) = (n as u128, m as u128);
    (n * n).div_ceil(n + 2 * m) as usize
}

/// `⌈n / (√n + 1)⌉`, evaluated without floating point.
pub fn sqrt_turan_bound(n: usize) -> usize {
    // smallest s with s(√n + 1) ≥ n, i.e. s ≥ n or s²n ≥ (n - s)²
    let n = n as u128;
    (0..=n)
        .find(|&s| s >= n || s * s * n >= (n - s) * (n - s))
        .unwrap_or(0) as usize
}

/// Greedy minimum-degree independent set, returned sorted.
///
/// Repeatedly takes a vertex of minimum current degree (smallest id on ties)
/// and deletes it together with its neighbours. The result has at least
/// [`turan_bound`] vertices.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut queue = MinDegreeQueue::new(g.degrees());
    let mut chosen = Vec::new();
    while let Some((v, _)) = queue.pop_min() {
        chosen.push(v);
        for &w in g.neighbors(v) {
            if queue.is_removed(w) {
                continue;
            }
            queue.remove(w);
            for &x in g.neighbors(w) {
                if !queue.is_removed(x) {
                    queue.decrement(x);
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Certificate returned by the dichotomy procedures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsOrTriangleResult {
    IndependentSet { vertices: Vec<usize>, guarantee: usize },
    TriangleFound(Triangle),
}

impl IsOrTriangleResult {
    /// Re-checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            IsOrTriangleResult::TriangleFound(t) => {
                if t.is_valid_in(g) {
                    Ok(())
                } else {
                    Err(format!("{t} is not a triangle"))
                }
            }
            IsOrTriangleResult::IndependentSet { vertices, guarantee } => {
                if vertices.len() < *guarantee {
                    return Err(format!("set of size {} below guarantee {guarantee}", vertices.len()));
                }
                let mut member = vec![false; g.n()];
                for &v in vertices {
                    if v >= g.n() || member[v] {
                        return Err(format!("vertex {v} out of range or repeated"));
                    }
                    member[v] = true;
                }
                for &v in vertices {
                    if let Some(&w) = g.neighbors(v).iter().find(|&&w| member[w]) {
                        return Err(format!("edge {v}-{w} inside the set"));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn is_triangle(&self) -> bool {
        matches!(self, IsOrTriangleResult::TriangleFound(_))
    }
}

/// A dichotomy outcome together with the work it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dichotomy {
    pub result: IsOrTriangleResult,
    /// Size of the neighbourhood subset that was pair-tested (0 if none).
    pub subset_size: usize,
    /// Adjacency probes spent on pair tests.
    pub pair_probes: u64,
}

/// Takes the `size` smallest-id neighbours of a maximum-degree vertex `v`
/// (smallest id on ties) and tests all pairs. An adjacent pair `x, y` gives the
/// triangle `vxy`; otherwise the subset is independent.
fn neighbourhood_test(g: &Graph, size: usize, guarantee: usize) -> Dichotomy {
    let v = (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("caller ensures at least one edge");
    let subset = &g.neighbors(v)[..size];
    let mut pair_probes = 0u64;
    for (p, &x) in subset.iter().enumerate() {
        for &y in &subset[p + 1..] {
            pair_probes += 1;
            if g.has_edge(x, y) {
                return Dichotomy {
                    result: IsOrTriangleResult::TriangleFound(Triangle::new(v, x, y)),
                    subset_size: size,
                    pair_probes,
                };
            }
        }
    }
    Dichotomy {
        result: IsOrTriangleResult::IndependentSet {
            vertices: subset.to_vec(),
            guarantee,
        },
        subset_size: size,
        pair_probes,
    }
}

/// An independent set of size `⌈2m/n⌉` or a triangle.
///
/// Pair tests use the adjacency matrix when `g` carries one and binary search
/// in the sorted lists otherwise. Without edges the whole vertex set is returned.
pub fn is_or_triangle(g: &Graph) -> Dichotomy {
    let (n, m) = (g.n(), g.m());
    if m == 0 {
        return Dichotomy {
            result: IsOrTriangleResult::IndependentSet {
                vertices: (0..n).collect(),
                guarantee: n,
            },
            subset_size: 0,
            pair_probes: 0,
        };
    }
    let size = (2 * m).div_ceil(n);
    neighbourhood_test(g, size, size)
}

/// An independent set within a `Ω(1/√n)` factor of optimum, or a triangle.
///
/// With average degree at most `√n` the greedy set is returned, which has at
/// least `⌈n/(√n+1)⌉` vertices. Otherwise `⌈√n⌉` neighbours of a maximum-degree
/// vertex are pair-tested.
pub fn approx_is_or_triangle(g: &Graph) -> Result<Dichotomy> {
    let (n, m) = (g.n(), g.m());
    if n == 0 {
        return Err(Error::ParamOutOfRange("graph must have at least one vertex".into()));
    }
    // 2m/n ≤ √n  ⟺  4m² ≤ n³
    let (n128, m128) = (n as u128, m as u128);
    if 4 * m128 * m128 <= n128 * n128 * n128 {
        return Ok(Dichotomy {
            result: IsOrTriangleResult::IndependentSet {
                vertices: greedy_independent_set(g),
                guarantee: sqrt_turan_bound(n),
            },
            subset_size: 0,
            pair_probes: 0,
        });
    }
    let size = ceil_sqrt(n as u64) as usize;
    Ok(neighbourhood_test(g, size, size))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::test_graphs::*;

    #[test]
    fn greedy_examples() {
        let c5 = greedy_independent_set(&cycle(5));
        assert_eq!(c5.len(), 2);
        assert_eq!(turan_bound(5, 5), 2);
        assert_eq!(greedy_independent_set(&star(9)), (1..=9).collect::<Vec<_>>());
        for n in 1..10 {
            assert_eq!(greedy_independent_set(&complete(n)).len(), 1);
        }
        assert!(greedy_independent_set(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn bounds() {
        assert_eq!(turan_bound(0, 0), 0);
        assert_eq!(turan_bound(9, 0), 9);
        assert_eq!(turan_bound(4, 6), 1);
        // n/(√n+1): n=9 → 2.25, n=16 → 3.2, n=1 → 0.5
        assert_eq!(sqrt_turan_bound(9), 3);
        assert_eq!(sqrt_turan_bound(16), 4);
        assert_eq!(sqrt_turan_bound(1), 1);
        assert_eq!(sqrt_turan_bound(0), 0);
        for n in 1..2000usize {
            let exact = n as f64 / ((n as f64).sqrt() + 1.0);
            let s = sqrt_turan_bound(n);
            assert!(s as f64 >= exact - 1e-9 && (s as f64) < exact + 1.0, "n={n}");
        }
    }

    #[test]
    fn dichotomy_examples() {
        let k3 = is_or_triangle(&complete(3));
        assert_eq!(k3.result, IsOrTriangleResult::TriangleFound(Triangle::new(0, 1, 2)));

        let bip = complete_bipartite(5, 5);
        let d = is_or_triangle(&bip);
        assert_eq!(
            d.result,
            IsOrTriangleResult::IndependentSet {
                vertices: vec![5, 6, 7, 8, 9],
                guarantee: 5
            }
        );
        assert!(d.result.validate(&bip).is_ok());
        assert!(d.pair_probes <= 25);

        let empty = is_or_triangle(&Graph::empty(4));
        assert_eq!(
            empty.result,
            IsOrTriangleResult::IndependentSet {
                vertices: vec![0, 1, 2, 3],
                guarantee: 4
            }
        );
    }

    #[test]
    fn approx_dichotomy_examples() {
        let d = approx_is_or_triangle(&Graph::empty(9)).unwrap();
        assert!(matches!(&d.result, IsOrTriangleResult::IndependentSet { vertices, .. } if vertices.len() == 9));

        let bip = complete_bipartite(10, 10);
        let d = approx_is_or_triangle(&bip).unwrap();
        match &d.result {
            IsOrTriangleResult::IndependentSet { vertices, guarantee } => {
                assert_eq!(vertices.len(), 5);
                assert_eq!(*guarantee, 5);
                assert!(vertices.iter().all(|&v| v >= 10));
            }
            other => panic!("unexpected {other:?}"),
        }
        let kn = complete(100).build_matrix().unwrap();
        assert!(approx_is_or_triangle(&kn).unwrap().result.is_triangle());
        assert!(approx_is_or_triangle(&Graph::empty(0)).is_err());
    }

    #[test]
    fn validator_rejects_bad_certificates() {
        let g = complete(4);
        let bad = IsOrTriangleResult::IndependentSet {
            vertices: vec![0, 1],
            guarantee: 1,
        };
        assert!(bad.validate(&g).is_err());
        let short = IsOrTriangleResult::IndependentSet {
            vertices: vec![0],
            guarantee: 2,
        };
        assert!(short.validate(&g).is_err());
        assert!(IsOrTriangleResult::TriangleFound(Triangle::new(0, 1, 2))
            .validate(&cycle(4))
            .is_err());
    }
}
