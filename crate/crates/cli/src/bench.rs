//! Benchmark harness: instance suites, timing cells and table output.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use trigraph::generators::FamilyParams;
use trigraph::graph::{edge_cost_sum, WORD_BITS};
use trigraph::triangles::{count_matrix, default_threshold, list_with};
use trigraph::{Algorithm, Graph};

use crate::{read_graph, CliError};

/// Fixed CSV column order.
pub const CSV_HEADER: &str = "family,n,m,algorithm,triangles,nanos,probes,matrix_bytes";

pub const DEFAULT_ALGORITHMS: [Algorithm; 5] = [
    Algorithm::Hybrid,
    Algorithm::ChibaNishizeki,
    Algorithm::ItaiRodeh,
    Algorithm::Matrix,
    Algorithm::Ayz,
];

/// Suite file contents. Every field is optional; an empty object is an empty suite.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteSpec {
    pub instances: Vec<InstanceSpec>,
    pub ladders: Vec<Ladder>,
    pub algorithms: Vec<Algorithm>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum InstanceSpec {
    Generated(FamilyParams),
    File { path: PathBuf },
}

/// A family swept over a size parameter.
#[derive(Debug, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Ladder {
    /// `clique_plus` at `m = ⌊n^exponent⌋` (capped at `C(n, 2)`) for each `n`.
    CliquePlus { n: Vec<usize>, exponent: f64 },
    /// `layered_cliques` with fixed `b` for each `k`.
    LayeredCliques { k: Vec<usize>, b: usize },
}

impl Ladder {
    fn expand(&self) -> Vec<FamilyParams> {
        match self {
            Ladder::CliquePlus { n, exponent } => n
                .iter()
                .map(|&n| {
                    let cap = n * n.saturating_sub(1) / 2;
                    let m = ((n as f64).powf(*exponent).floor() as usize).min(cap);
                    FamilyParams::CliquePlus { n, m }
                })
                .collect(),
            Ladder::LayeredCliques { k, b } => k
                .iter()
                .map(|&k| FamilyParams::LayeredCliques { k, b: *b })
                .collect(),
        }
    }
}

pub struct Instance {
    pub family: String,
    pub graph: Graph,
}

impl SuiteSpec {
    /// Materializes every instance in suite order: explicit instances, then ladders.
    pub fn instances(&self) -> Result<Vec<Instance>, CliError> {
        let ladder_specs: Vec<InstanceSpec> = self
            .ladders
            .iter()
            .flat_map(Ladder::expand)
            .map(InstanceSpec::Generated)
            .collect();
        self.instances.iter().chain(&ladder_specs).map(load).collect()
    }
}

fn load(spec: &InstanceSpec) -> Result<Instance, CliError> {
    match spec {
        InstanceSpec::Generated(p) => Ok(Instance {
            family: p.family().to_string(),
            graph: p.generate()?.graph,
        }),
        InstanceSpec::File { path } => Ok(Instance {
            family: "file".to_string(),
            graph: read_graph(path)?,
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub triangles: u64,
    pub nanos: u64,
    pub probes: u64,
    pub matrix_bytes: usize,
    /// `F(G)`.
    pub edge_cost_sum: u64,
    /// `4 m^{3/2}`.
    pub edge_cost_bound: f64,
}

fn matrix_bytes_for(n: usize) -> usize {
    n * n.div_ceil(WORD_BITS) * std::mem::size_of::<u64>()
}

fn run_cell(inst: &Instance, matrix_graph: Option<&Graph>, algorithm: Algorithm, matrix_budget: usize) -> Result<BenchRecord, CliError> {
    let g = &inst.graph;
    let needs = |alg: Algorithm| {
        matrix_graph.ok_or_else(|| {
            CliError::Data(format!(
                "{alg} needs an adjacency matrix but n={} exceeds the matrix budget {matrix_budget}; use chiba_nishizeki",
                g.n()
            ))
        })
    };
    let (triangles, nanos, probes, matrix_bytes) = match algorithm {
        Algorithm::Matrix => {
            let gm = needs(algorithm)?;
            let start = Instant::now();
            let t = count_matrix(gm)?;
            let words = gm.matrix().map_or(0, |m| m.words_per_row()) as u64;
            (t, start.elapsed().as_nanos() as u64, words * g.m() as u64, matrix_bytes_for(g.n()))
        }
        Algorithm::Hybrid => {
            let gm = needs(algorithm)?;
            let r = list_with(gm, algorithm, matrix_budget, |_| {})?;
            (r.triangles_emitted, r.elapsed.as_nanos() as u64, r.probes, matrix_bytes_for(g.n()))
        }
        _ => {
            let r = list_with(g, algorithm, matrix_budget, |_| {})?;
            let bytes = if algorithm == Algorithm::Ayz {
                let threshold = default_threshold(g.m());
                matrix_bytes_for((0..g.n()).filter(|&v| g.degree(v) > threshold).count())
            } else {
                0
            };
            (r.triangles_emitted, r.elapsed.as_nanos() as u64, r.probes, bytes)
        }
    };
    Ok(BenchRecord {
        family: inst.family.clone(),
        n: g.n(),
        m: g.m(),
        algorithm,
        triangles,
        nanos,
        probes,
        matrix_bytes,
        edge_cost_sum: edge_cost_sum(g),
        edge_cost_bound: 4.0 * (g.m() as f64).powf(1.5),
    })
}

/// Runs every (instance, algorithm) cell, possibly in parallel, and returns the
/// records in suite order. Fails if algorithms disagree on any instance.
pub fn run_suite(instances: &[Instance], algorithms: &[Algorithm], matrix_budget: usize) -> Result<Vec<BenchRecord>, CliError> {
    let with_matrix: Vec<Option<Graph>> = instances
        .iter()
        .map(|inst| {
            let wanted = algorithms.iter().any(|a| a.needs_matrix()) && inst.graph.n() <= matrix_budget;
            wanted.then(|| inst.graph.clone().build_matrix_with_budget(matrix_budget)).transpose()
        })
        .collect::<Result<_, _>>()?;

    let cells: Vec<(usize, Algorithm)> = (0..instances.len())
        .flat_map(|i| algorithms.iter().map(move |&a| (i, a)))
        .collect();
    let records = cells
        .par_iter()
        .map(|&(i, a)| run_cell(&instances[i], with_matrix[i].as_ref(), a, matrix_budget))
        .collect::<Result<Vec<_>, _>>()?;

    for chunk in records.chunks(algorithms.len().max(1)) {
        if let Some(first) = chunk.first() {
            if let Some(bad) = chunk.iter().find(|r| r.triangles != first.triangles) {
                return Err(CliError::Data(format!(
                    "count mismatch on {} (n={}, m={}): {} says {}, {} says {}",
                    first.family, first.n, first.m, first.algorithm, first.triangles, bad.algorithm, bad.triangles
                )));
            }
        }
    }
    Ok(records)
}

pub fn write_csv(records: &[BenchRecord], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.family, r.n, r.m, r.algorithm, r.triangles, r.nanos, r.probes, r.matrix_bytes
        )?;
    }
    Ok(())
}
