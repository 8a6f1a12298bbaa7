#![allow(dead_code)]

use trigraph::generators::gen_random;
use trigraph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(Some(n), (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_list(Some(a + b), (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Every `ell`-subset of vertices that is pairwise adjacent, by exhaustive enumeration.
pub fn brute_force_cliques(g: &Graph, ell: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, ell: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == ell {
            out.push(current.clone());
            return;
        }
        for v in start..g.n() {
            if current.iter().all(|&u| g.neighbors(u).contains(&v)) {
                current.push(v);
                rec(g, ell, v + 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, ell, 0, &mut Vec::new(), &mut out);
    out
}

/// Triangles via the definition: all triples, adjacency read from neighbour slices.
pub fn naive_triangle_count(g: &Graph) -> u64 {
    let n = g.n();
    let adj = |a: usize, b: usize| g.neighbors(a).contains(&b);
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if adj(i, j) && adj(i, k) && adj(j, k) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Seeded random graphs from sparse to complete over `n ∈ 8..=128`.
pub fn random_corpus(count: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 8 + (i * 37) % 121;
            let max = n * (n - 1) / 2;
            // density sweeps 0..=1 across the corpus
            let m = max * (i % 11) / 10;
            gen_random(n, m, 1000 + i as u64).unwrap().graph
        })
        .collect()
}
