//! Exact triangle detection, listing and counting, plus `K_ℓ` listing.
//!
//! Every listing routine streams canonical [`Triangle`]s into a visitor and
//! returns a [`ListingReport`]. Collecting into a vector is left to callers.

mod ayz;
mod brute;
mod chiba_nishizeki;
mod cliques;
mod hybrid;
mod itai_rodeh;
mod matrix;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use ayz::{default_threshold, list_ayz, list_ayz_with_budget};
pub use brute::brute_force_list;
pub use chiba_nishizeki::list_chiba_nishizeki;
pub use cliques::{list_cliques, CliqueTuple, MAX_ELL, MIN_ELL};
pub use hybrid::list_hybrid;
pub use itai_rodeh::list_itai_rodeh;
pub use matrix::{count_matrix, detect_matrix, list_matrix};

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MATRIX_BUDGET};

/// Triangle `{i, j, k}` stored with `i < j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Triangle {
    /// Canonicalizes three distinct vertex ids.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Self {
            i: v[0],
            j: v[1],
            k: v[2],
        }
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.i, self.j, self.k]
    }

    /// Ordering holds and all three edges exist in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.i < self.j
            && self.j < self.k
            && self.k < g.n()
            && g.has_edge(self.i, self.j)
            && g.has_edge(self.i, self.k)
            && g.has_edge(self.j, self.k)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.i, self.j, self.k)
    }
}

/// Outcome of one listing run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListingReport {
    pub algorithm: &'static str,
    /// Number of visitor invocations.
    pub triangles_emitted: u64,
    pub elapsed: Duration,
    /// Algorithm-specific unit of work (neighbour probes, pair tests, word ANDs).
    pub probes: u64,
}

/// Times `body`, which returns `(emitted, probes)`.
pub(crate) fn timed(algorithm: &'static str, body: impl FnOnce() -> (u64, u64)) -> ListingReport {
    let start = Instant::now();
    let (triangles_emitted, probes) = body();
    ListingReport {
        algorithm,
        triangles_emitted,
        elapsed: start.elapsed(),
        probes,
    }
}

/// Exact triangle algorithm selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Hybrid,
    ChibaNishizeki,
    ItaiRodeh,
    Matrix,
    Ayz,
    Brute,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Hybrid,
        Algorithm::ChibaNishizeki,
        Algorithm::ItaiRodeh,
        Algorithm::Matrix,
        Algorithm::Ayz,
        Algorithm::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Hybrid => "hybrid",
            Algorithm::ChibaNishizeki => "chiba_nishizeki",
            Algorithm::ItaiRodeh => "itai_rodeh",
            Algorithm::Matrix => "matrix",
            Algorithm::Ayz => "ayz",
            Algorithm::Brute => "brute",
        }
    }

    /// Whether the algorithm probes the adjacency matrix of the whole graph.
    pub fn needs_matrix(self) -> bool {
        matches!(self, Algorithm::Hybrid | Algorithm::Matrix)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        let key = match key.as_str() {
            "cn" => "chiba_nishizeki".to_string(),
            "ir" => "itai_rodeh".to_string(),
            _ => key,
        };
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == key)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Runs `algorithm`, streaming triangles to `visitor`.
///
/// Matrix-based algorithms build a temporary matrix (within `matrix_budget`)
/// when `g` does not carry one.
pub fn list_with(
    g: &Graph,
    algorithm: Algorithm,
    matrix_budget: usize,
    mut visitor: impl FnMut(Triangle),
) -> Result<ListingReport> {
    match algorithm {
        Algorithm::Hybrid => list_hybrid(&*g.with_matrix(matrix_budget)?, visitor),
        Algorithm::Matrix => list_matrix(&*g.with_matrix(matrix_budget)?, visitor),
        Algorithm::ChibaNishizeki => Ok(list_chiba_nishizeki(g, visitor)),
        Algorithm::ItaiRodeh => Ok(list_itai_rodeh(g, visitor)),
        Algorithm::Ayz => list_ayz_with_budget(g, None, matrix_budget, visitor),
        Algorithm::Brute => Ok(timed("brute", || {
            let all = brute_force_list(g);
            let emitted = all.len() as u64;
            all.into_iter().for_each(&mut visitor);
            (emitted, 0)
        })),
    }
}

/// Triangle count by the named algorithm, using the default matrix budget.
pub fn count(g: &Graph, algorithm: &str) -> Result<u64> {
    count_by(g, algorithm.parse()?, DEFAULT_MATRIX_BUDGET)
}

/// Triangle count by `algorithm`; the matrix algorithm counts by popcount, the
/// rest count visitor calls.
pub fn count_by(g: &Graph, algorithm: Algorithm, matrix_budget: usize) -> Result<u64> {
    match algorithm {
        Algorithm::Matrix => count_matrix(&*g.with_matrix(matrix_budget)?),
        other => Ok(list_with(g, other, matrix_budget, |_| {})?.triangles_emitted),
    }
}

/// Collects and sorts the triangles produced by `algorithm`.
pub fn collect_sorted(g: &Graph, algorithm: Algorithm, matrix_budget: usize) -> Result<Vec<Triangle>> {
    let mut out = Vec::new();
    list_with(g, algorithm, matrix_budget, |t| out.push(t))?;
    out.sort_unstable();
    Ok(out)
}
