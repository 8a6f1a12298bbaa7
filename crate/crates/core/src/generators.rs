//! Extremal and random instance generators.
//!
//! The two structured families carry closed-form triangle and `K_ℓ` counts so
//! the counting algorithms can be checked against something other than
//! themselves.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triangles::{MAX_ELL, MIN_ELL};

/// Family name and parameters of a generated instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    CliquePlus { n: usize, m: usize },
    LayeredCliques { k: usize, b: usize },
    Gnm { n: usize, m: usize, seed: u64 },
    Gnp { n: usize, p: f64, seed: u64 },
}

impl FamilyParams {
    pub fn family(&self) -> &'static str {
        match self {
            FamilyParams::CliquePlus { .. } => "clique_plus",
            FamilyParams::LayeredCliques { .. } => "layered_cliques",
            FamilyParams::Gnm { .. } => "gnm",
            FamilyParams::Gnp { .. } => "gnp",
        }
    }

    pub fn generate(&self) -> Result<GeneratedInstance> {
        match *self {
            FamilyParams::CliquePlus { n, m } => gen_clique_plus(n, m),
            FamilyParams::LayeredCliques { k, b } => gen_layered_cliques(k, b),
            FamilyParams::Gnm { n, m, seed } => gen_random(n, m, seed),
            FamilyParams::Gnp { n, p, seed } => gen_gnp(n, p, seed),
        }
    }
}

/// Which closed form produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    /// `C(x, ℓ) + Σ_{u ∈ V₂} C(cross_deg(u), ℓ-1)`.
    CliquePlus,
    /// `k·C(b, ℓ) + k·C(b, ℓ-1)·b/2`.
    LayeredCliques,
}

/// Exact subgraph counts known from the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub triangles: u64,
    /// `K_ℓ` counts for `ℓ` in `3..=8`.
    pub cliques: BTreeMap<usize, u64>,
    pub derivation: Derivation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedInstance {
    pub graph: Graph,
    pub params: FamilyParams,
    pub certificate: Option<Certificate>,
    pub arboricity_upper: Option<usize>,
}

impl GeneratedInstance {
    pub fn family(&self) -> &'static str {
        self.params.family()
    }
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParamOutOfRange(msg.into())
}

/// A clique on `x = ⌊√(2m)⌋` vertices, an independent remainder, and the
/// `m - C(x, 2)` surplus edges joining remainder vertices to clique vertices in
/// lexicographic order (first remainder vertex to clique vertices `0, 1, ...`,
/// then the next).
pub fn gen_clique_plus(n: usize, m: usize) -> Result<GeneratedInstance> {
    let max_edges = binomial(n as u64, 2) as usize;
    if n < 3 || m < 3 || m > max_edges {
        return Err(out_of_range(format!(
            "clique_plus needs n >= 3 and 3 <= m <= C(n,2); got n={n}, m={m}"
        )));
    }
    let x = (2 * m).isqrt();
    let mut surplus = m - x * (x - 1) / 2;
    if surplus > x * (n - x) {
        return Err(out_of_range(format!("surplus {surplus} exceeds cross capacity")));
    }

    let mut edges: Vec<(usize, usize)> = (0..x).flat_map(|u| (u + 1..x).map(move |v| (u, v))).collect();
    let mut cross_degrees = Vec::new();
    for u in x..n {
        if surplus == 0 {
            break;
        }
        let c = surplus.min(x);
        edges.extend((0..c).map(|v| (v, u)));
        cross_degrees.push(c as u64);
        surplus -= c;
    }
    let graph = Graph::from_edge_list(Some(n), edges)?;
    debug_assert_eq!(graph.m(), m);

    let count = |ell: u64| {
        binomial(x as u64, ell) + cross_degrees.iter().map(|&c| binomial(c, ell - 1)).sum::<u64>()
    };
    let cliques = (MIN_ELL..=MAX_ELL).map(|l| (l, count(l as u64))).collect();
    Ok(GeneratedInstance {
        graph,
        params: FamilyParams::CliquePlus { n, m },
        certificate: Some(Certificate {
            triangles: count(3),
            cliques,
            derivation: Derivation::CliquePlus,
        }),
        arboricity_upper: None,
    })
}

/// `k` disjoint copies of `K_b` on consecutive ids, followed by `b/2`
/// independent vertices each joined to every clique vertex.
///
/// `n = kb + b/2`, `m = k·C(b,2) + k·b²/2`, and the arboricity is at most `b`.
pub fn gen_layered_cliques(k: usize, b: usize) -> Result<GeneratedInstance> {
    if k < 1 || b < 2 || !b.is_multiple_of(2) {
        return Err(out_of_range(format!(
            "layered_cliques needs k >= 1 and even b >= 2; got k={k}, b={b}"
        )));
    }
    let core = k * b;
    let n = core + b / 2;
    let mut edges = Vec::with_capacity(k * b * (b - 1) / 2 + core * b / 2);
    for block in 0..k {
        let base = block * b;
        for u in base..base + b {
            edges.extend((u + 1..base + b).map(|v| (u, v)));
        }
    }
    for apex in core..n {
        edges.extend((0..core).map(|v| (v, apex)));
    }
    let graph = Graph::from_edge_list(Some(n), edges)?;

    let (k64, b64) = (k as u64, b as u64);
    let count = |ell: u64| k64 * binomial(b64, ell) + k64 * binomial(b64, ell - 1) * (b64 / 2);
    let cliques = (MIN_ELL..=MAX_ELL).map(|l| (l, count(l as u64))).collect();
    Ok(GeneratedInstance {
        graph,
        params: FamilyParams::LayeredCliques { k, b },
        certificate: Some(Certificate {
            triangles: count(3),
            cliques,
            derivation: Derivation::LayeredCliques,
        }),
        arboricity_upper: Some(b),
    })
}

/// Uniform graph with exactly `m` edges: `m` distinct ranks are drawn from the
/// `C(n, 2)` lexicographically ordered vertex pairs and decoded.
pub fn gen_random(n: usize, m: usize, seed: u64) -> Result<GeneratedInstance> {
    let total = binomial(n as u64, 2) as usize;
    if m > total {
        return Err(out_of_range(format!("m={m} exceeds C({n},2)={total}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks = index::sample(&mut rng, total, m).into_vec();
    ranks.sort_unstable();

    let mut edges = Vec::with_capacity(m);
    let (mut u, mut row_start) = (0usize, 0usize);
    for r in ranks {
        // row u holds pairs (u, u+1..n)
        while r >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        edges.push((u, u + 1 + (r - row_start)));
    }
    Ok(GeneratedInstance {
        graph: Graph::from_edge_list(Some(n), edges)?,
        params: FamilyParams::Gnm { n, m, seed },
        certificate: None,
        arboricity_upper: None,
    })
}

/// Erdős–Rényi graph keeping each pair independently with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<GeneratedInstance> {
    if !(0.0..=1.0).contains(&p) {
        return Err(out_of_range(format!("p={p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(GeneratedInstance {
        graph: Graph::from_edge_list(Some(n), edges)?,
        params: FamilyParams::Gnp { n, p, seed },
        certificate: None,
        arboricity_upper: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_plus_small() {
        let g = gen_clique_plus(10, 21).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (10, 21));
        assert_eq!(g.certificate.as_ref().unwrap().triangles, 35);
        // x = 6; vertex 6 joined to all of V1, vertices 7..9 isolated
        assert_eq!(g.graph.neighbors(6), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(g.graph.degree(7), 0);

        let tiny = gen_clique_plus(4, 3).unwrap();
        assert_eq!(tiny.graph.to_edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(tiny.certificate.unwrap().triangles, 1);
    }

    #[test]
    fn clique_plus_pure_clique() {
        for x in 3..12usize {
            let g = gen_clique_plus(x, x * (x - 1) / 2).unwrap();
            assert_eq!(g.certificate.unwrap().triangles, binomial(x as u64, 3));
        }
    }

    #[test]
    fn clique_plus_rejects() {
        assert!(gen_clique_plus(2, 1).is_err());
        assert!(gen_clique_plus(5, 2).is_err());
        assert!(gen_clique_plus(5, 11).is_err());
    }

    #[test]
    fn layered_cliques_shapes() {
        let g = gen_layered_cliques(3, 4).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (14, 42));
        let cert = g.certificate.unwrap();
        assert_eq!(cert.triangles, 48);
        assert_eq!(g.arboricity_upper, Some(4));

        let tiny = gen_layered_cliques(1, 2).unwrap();
        assert_eq!(tiny.graph.to_edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(tiny.certificate.unwrap().triangles, 1);

        let k4 = gen_layered_cliques(2, 4).unwrap();
        assert_eq!(k4.certificate.unwrap().cliques[&4], 18);

        assert!(gen_layered_cliques(0, 4).is_err());
        assert!(gen_layered_cliques(2, 3).is_err());
    }

    #[test]
    fn random_families() {
        let k5 = gen_random(5, 10, 1).unwrap().graph;
        assert_eq!(k5.m(), 10);
        assert_eq!(gen_random(100, 0, 1).unwrap().graph.m(), 0);
        assert_eq!(gen_random(64, 512, 7).unwrap(), gen_random(64, 512, 7).unwrap());
        assert_ne!(gen_random(64, 512, 7).unwrap().graph, gen_random(64, 512, 8).unwrap().graph);
        assert!(gen_random(4, 7, 0).is_err());
        assert_eq!(gen_random(0, 0, 0).unwrap().graph.n(), 0);

        assert_eq!(gen_gnp(6, 1.0, 3).unwrap().graph.m(), 15);
        assert_eq!(gen_gnp(6, 0.0, 3).unwrap().graph.m(), 0);
        assert_eq!(gen_gnp(40, 0.3, 3).unwrap(), gen_gnp(40, 0.3, 3).unwrap());
        assert!(gen_gnp(4, 1.5, 0).is_err());
    }

    #[test]
    fn params_round_trip_through_json() {
        let p = FamilyParams::LayeredCliques { k: 3, b: 4 };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"family":"layered_cliques","k":3,"b":4}"#);
        assert_eq!(serde_json::from_str::<FamilyParams>(&s).unwrap(), p);
    }
}
