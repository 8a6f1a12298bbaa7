//! Command-line front end: argument handling, file I/O and output formatting.

pub mod args;
pub mod bench;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;
use trigraph::approx::{approx_count, detect_via_sampling, variance_bound, ApproxParams};
use trigraph::generators::{Certificate, FamilyParams, GeneratedInstance};
use trigraph::independent::{approx_is_or_triangle, is_or_triangle};
use trigraph::io::{read_edge_list, write_edge_list};
use trigraph::triangles::{count_by, count_matrix, detect_matrix, list_ayz_with_budget, list_cliques, list_with};
use trigraph::{Algorithm, Graph, GraphStats, IsOrTriangleResult, Triangle};

use args::{Cli, Command, DetectMethod, Family, TableFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

/// Largest graph on which `verify` runs the cubic brute-force oracle.
pub const ORACLE_LIMIT: usize = 500;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) | CliError::VerifyFailed => EXIT_DATA,
        }
    }
}

impl From<trigraph::Error> for CliError {
    fn from(e: trigraph::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

/// Certificate sidecar written next to generated edge lists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub family: String,
    pub params: FamilyParams,
    pub n: usize,
    pub m: usize,
    pub counts: Option<Certificate>,
    pub arboricity_upper: Option<usize>,
}

impl From<&GeneratedInstance> for CertificateRecord {
    fn from(inst: &GeneratedInstance) -> Self {
        Self {
            family: inst.family().to_string(),
            params: inst.params.clone(),
            n: inst.graph.n(),
            m: inst.graph.m(),
            counts: inst.certificate.clone(),
            arboricity_upper: inst.arboricity_upper,
        }
    }
}

/// Sidecar path for an edge-list path: `<path>.cert.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".cert.json");
    PathBuf::from(s)
}

/// Reads an edge list from `path`, or from stdin when `path` is `-`.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let reader: Box<dyn BufRead> = if path == Path::new("-") {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let file = File::open(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        Box::new(BufReader::new(file))
    };
    read_edge_list(reader).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn triple(t: &Triangle) -> [usize; 3] {
    t.vertices()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let budget = cli.matrix_budget;
    match &cli.command {
        Command::Detect {
            input,
            method,
            delta,
            seed,
            max_rounds,
        } => {
            let g = read_graph(input)?;
            let found = match method {
                DetectMethod::Matrix => detect_matrix(&g.build_matrix_with_budget(budget)?)?,
                DetectMethod::Sampling => {
                    let mut params = ApproxParams::new(*delta, 0.5, *seed);
                    params.matrix_budget = budget;
                    detect_via_sampling(&g, &params, *max_rounds)?
                }
            };
            if cli.json {
                writeln!(out, "{}", json!({ "triangle": found.as_ref().map(triple) }))?;
            } else {
                match found {
                    Some(t) => writeln!(out, "{t}")?,
                    None => writeln!(out, "none")?,
                }
            }
        }

        Command::Count { input, algo, threshold } => {
            let g = read_graph(input)?;
            let count = match (algo, threshold) {
                (Algorithm::Ayz, Some(_)) => list_ayz_with_budget(&g, *threshold, budget, |_| {})?.triangles_emitted,
                _ => count_by(&g, *algo, budget)?,
            };
            if cli.json {
                writeln!(out, "{}", json!({ "algorithm": algo, "triangles": count }))?;
            } else {
                writeln!(out, "{count}")?;
            }
        }

        Command::List {
            input,
            algo,
            threshold,
            sorted,
            count_only,
        } => {
            let g = read_graph(input)?;
            let lister = |visitor: &mut dyn FnMut(Triangle)| match (algo, threshold) {
                (Algorithm::Ayz, Some(_)) => list_ayz_with_budget(&g, *threshold, budget, visitor),
                _ => list_with(&g, *algo, budget, visitor),
            };
            if *count_only {
                let report = lister(&mut |_| {})?;
                if cli.json {
                    writeln!(out, "{}", json!({ "algorithm": algo, "triangles": report.triangles_emitted }))?;
                } else {
                    writeln!(out, "{}", report.triangles_emitted)?;
                }
            } else if *sorted || cli.json {
                let mut all = Vec::new();
                lister(&mut |t| all.push(t))?;
                all.sort_unstable();
                let mut w = BufWriter::new(out);
                if cli.json {
                    let triples: Vec<_> = all.iter().map(triple).collect();
                    writeln!(w, "{}", json!({ "algorithm": algo, "triangles": triples }))?;
                } else {
                    for t in &all {
                        writeln!(w, "{t}")?;
                    }
                }
                w.flush()?;
            } else {
                let mut w = BufWriter::new(out);
                let mut failure = None;
                lister(&mut |t| {
                    if failure.is_none() {
                        if let Err(e) = writeln!(w, "{t}") {
                            failure = Some(e);
                        }
                    }
                })?;
                if let Some(e) = failure {
                    return Err(e.into());
                }
                w.flush()?;
            }
        }

        Command::Approx {
            input,
            delta,
            epsilon,
            seed,
            trials,
            p,
        } => {
            let g = read_graph(input)?;
            let mut params = ApproxParams::new(*delta, *epsilon, *seed).with_trials(*trials);
            params.p_override = *p;
            params.matrix_budget = budget;
            let r = approx_count(&g, &params)?;
            let per_trial: Vec<_> = r
                .trials
                .iter()
                .map(|t| json!({ "X": t.sample_size, "Y": t.induced_edges, "Z": t.induced_triangles, "estimate": t.estimate }))
                .collect();
            let t_hat = r.estimate.max(0.0).round() as u64;
            let record = json!({
                "estimate": r.estimate,
                "trials": r.trials.len(),
                "p": r.p_used,
                "delta": delta,
                "epsilon": epsilon,
                "per_trial": per_trial,
                "witness": r.witness.as_ref().map(triple),
                "seed": r.seed,
                "variance_bound_at_estimate": variance_bound(g.n() as u64, g.m() as u64, t_hat, r.p_used),
                "warnings": r.warnings,
            });
            if cli.json {
                writeln!(out, "{record}")?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            }
        }

        Command::IsOrTriangle { input, approx } => {
            let g = read_graph(input)?;
            let g = if g.n() <= budget { g.build_matrix_with_budget(budget)? } else { g };
            let d = if *approx { approx_is_or_triangle(&g)? } else { is_or_triangle(&g) };
            match (&d.result, cli.json) {
                (IsOrTriangleResult::IndependentSet { vertices, guarantee }, true) => writeln!(
                    out,
                    "{}",
                    json!({ "kind": "independent_set", "size": vertices.len(), "guarantee": guarantee, "vertices": vertices, "pair_probes": d.pair_probes })
                )?,
                (IsOrTriangleResult::TriangleFound(t), true) => writeln!(
                    out,
                    "{}",
                    json!({ "kind": "triangle", "triangle": triple(t), "pair_probes": d.pair_probes })
                )?,
                (IsOrTriangleResult::IndependentSet { vertices, .. }, false) => {
                    let list: Vec<String> = vertices.iter().map(usize::to_string).collect();
                    writeln!(out, "IS {}: {}", vertices.len(), list.join(" "))?
                }
                (IsOrTriangleResult::TriangleFound(t), false) => writeln!(out, "TRIANGLE: {t}")?,
            }
        }

        Command::Cliques { input, ell, count_only } => {
            let g = read_graph(input)?;
            if *count_only {
                let report = list_cliques(&g, *ell, |_| {})?;
                if cli.json {
                    writeln!(out, "{}", json!({ "ell": ell, "count": report.triangles_emitted }))?;
                } else {
                    writeln!(out, "{}", report.triangles_emitted)?;
                }
            } else {
                let mut all = Vec::new();
                list_cliques(&g, *ell, |c| all.push(c))?;
                all.sort_unstable();
                let mut w = BufWriter::new(out);
                if cli.json {
                    writeln!(w, "{}", json!({ "ell": ell, "count": all.len(), "cliques": all }))?;
                } else {
                    for c in &all {
                        let line: Vec<String> = c.vertices().iter().map(usize::to_string).collect();
                        writeln!(w, "{}", line.join(" "))?;
                    }
                }
                w.flush()?;
            }
        }

        Command::Generate {
            family,
            n,
            m,
            k,
            b,
            p,
            seed,
            out: path,
        } => {
            let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this family")));
            let params = match family {
                Family::CliquePlus => FamilyParams::CliquePlus { n: need(*n, "n")?, m: need(*m, "m")? },
                Family::LayeredCliques => FamilyParams::LayeredCliques { k: need(*k, "k")?, b: need(*b, "b")? },
                Family::Gnm => FamilyParams::Gnm { n: need(*n, "n")?, m: need(*m, "m")?, seed: *seed },
                Family::Gnp => FamilyParams::Gnp {
                    n: need(*n, "n")?,
                    p: p.ok_or_else(|| CliError::Usage("--p is required for gnp".into()))?,
                    seed: *seed,
                },
            };
            let inst = params.generate()?;
            let record = CertificateRecord::from(&inst);
            match path {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    write_edge_list(&inst.graph, &mut file)?;
                    file.flush()?;
                    let sidecar = sidecar_path(path);
                    std::fs::write(&sidecar, serde_json::to_string_pretty(&record)? + "\n")?;
                    if cli.json {
                        writeln!(out, "{}", serde_json::to_string(&record)?)?;
                    } else {
                        writeln!(
                            out,
                            "wrote {} (n={}, m={}) and {}",
                            path.display(),
                            record.n,
                            record.m,
                            sidecar.display()
                        )?;
                    }
                }
                None => write_edge_list(&inst.graph, out)?,
            }
        }

        Command::Verify { input, cert } => verify(cli, input, cert.as_deref(), out)?,

        Command::Bench {
            suite,
            input,
            algos,
            format,
            out: path,
        } => {
            let (instances, suite_algos) = match (suite, input) {
                (Some(s), _) => {
                    let text = std::fs::read_to_string(s).map_err(|e| CliError::Data(format!("{}: {e}", s.display())))?;
                    let spec: bench::SuiteSpec =
                        serde_json::from_str(&text).map_err(|e| CliError::Data(format!("{}: {e}", s.display())))?;
                    (spec.instances()?, spec.algorithms)
                }
                (None, Some(path)) => (
                    vec![bench::Instance {
                        family: "file".into(),
                        graph: read_graph(path)?,
                    }],
                    Vec::new(),
                ),
                (None, None) => return Err(CliError::Usage("bench needs --suite or --in".into())),
            };
            let algorithms = if !algos.is_empty() {
                algos.clone()
            } else if !suite_algos.is_empty() {
                suite_algos
            } else {
                bench::DEFAULT_ALGORITHMS.to_vec()
            };
            let records = bench::run_suite(&instances, &algorithms, budget)?;
            let mut sink: Box<dyn Write + '_> = match path {
                Some(p) => Box::new(BufWriter::new(File::create(p)?)),
                None => Box::new(BufWriter::new(out)),
            };
            if cli.json || *format == TableFormat::Json {
                writeln!(sink, "{}", serde_json::to_string_pretty(&records)?)?;
            } else {
                bench::write_csv(&records, &mut sink)?;
            }
            sink.flush()?;
        }

        Command::Stats { input } => {
            let g = read_graph(input)?;
            let s = GraphStats::compute(&g);
            let m = s.m as f64;
            let avg = *s.avg_degree.numer() as f64 / *s.avg_degree.denom() as f64;
            let record = json!({
                "n": s.n,
                "m": s.m,
                "max_degree": s.max_degree,
                "avg_degree": format!("{}", s.avg_degree),
                "avg_degree_value": avg,
                "edge_cost_sum": s.edge_cost_sum,
                "edge_cost_bound": 4.0 * m.powf(1.5),
                "triangle_bound": 2f64.sqrt() / 3.0 * m.powf(1.5),
                "degeneracy": s.degeneracy,
                "arboricity_lower": s.arboricity_lower,
                "arboricity_upper": s.arboricity_upper,
                "word_bits": s.word_bits,
            });
            if cli.json {
                writeln!(out, "{record}")?;
            } else {
                writeln!(out, "n                 {}", s.n)?;
                writeln!(out, "m                 {}", s.m)?;
                writeln!(out, "max_degree        {}", s.max_degree)?;
                writeln!(out, "avg_degree        {} ({avg:.4})", s.avg_degree)?;
                writeln!(out, "edge_cost_sum     {}", s.edge_cost_sum)?;
                writeln!(out, "edge_cost_bound   {:.1}", 4.0 * m.powf(1.5))?;
                writeln!(out, "degeneracy        {}", s.degeneracy)?;
                writeln!(out, "arboricity        [{}, {}]", s.arboricity_lower, s.arboricity_upper)?;
                writeln!(out, "word_bits         {}", s.word_bits)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Check {
    check: String,
    status: &'static str,
    value: Option<u64>,
}

fn verify(cli: &Cli, input: &Path, cert: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let budget = cli.matrix_budget;
    let g = read_graph(input)?;
    let mut checks = Vec::new();
    let mut record = |check: String, status: &'static str, value: Option<u64>| checks.push(Check { check, status, value });

    match g.check_invariants() {
        Ok(()) => record("graph invariants".into(), "ok", None),
        Err(e) => record(format!("graph invariants: {e}"), "fail", None),
    }

    let reference = {
        let mut v = Vec::new();
        list_with(&g, Algorithm::ChibaNishizeki, budget, |t| v.push(t))?;
        v.sort_unstable();
        v
    };
    let t = reference.len() as u64;
    for algo in Algorithm::ALL {
        if algo == Algorithm::Brute && g.n() > ORACLE_LIMIT {
            record(format!("{algo} (n > {ORACLE_LIMIT})"), "skip", None);
            continue;
        }
        if algo.needs_matrix() && g.n() > budget {
            record(format!("{algo} (n > matrix budget)"), "skip", None);
            continue;
        }
        let mut got = Vec::new();
        list_with(&g, algo, budget, |t| got.push(t))?;
        got.sort_unstable();
        let status = if got == reference { "ok" } else { "fail" };
        record(format!("{algo} listing"), status, Some(got.len() as u64));
        if algo == Algorithm::Matrix {
            let c = count_matrix(&*g.with_matrix(budget)?)?;
            record("matrix popcount count".into(), if c == t { "ok" } else { "fail" }, Some(c));
        }
    }

    let cert_path = cert.map(Path::to_path_buf).or_else(|| {
        let p = sidecar_path(input);
        p.exists().then_some(p)
    });
    if let Some(path) = cert_path {
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let rec: CertificateRecord = serde_json::from_str(&text)?;
        let shape_ok = rec.n == g.n() && rec.m == g.m();
        record(format!("certificate shape n={} m={}", rec.n, rec.m), if shape_ok { "ok" } else { "fail" }, None);
        if let Some(counts) = rec.counts {
            record("certificate triangles".into(), if counts.triangles == t { "ok" } else { "fail" }, Some(counts.triangles));
            for (&ell, &expected) in &counts.cliques {
                // listing cost is proportional to the count
                if ell == 3 || expected > 5_000_000 {
                    continue;
                }
                let got = list_cliques(&g, ell, |_| {})?.triangles_emitted;
                record(format!("certificate K_{ell}"), if got == expected { "ok" } else { "fail" }, Some(got));
            }
        }
    }

    let agree = checks.iter().all(|c| c.status != "fail");
    if cli.json {
        writeln!(out, "{}", json!({ "agree": agree, "triangles": t, "checks": checks }))?;
    } else {
        for c in &checks {
            match c.value {
                Some(v) => writeln!(out, "{:<5} {} = {v}", c.status, c.check)?,
                None => writeln!(out, "{:<5} {}", c.status, c.check)?,
            }
        }
        writeln!(out, "{}", if agree { format!("all checks agree: {t} triangles") } else { "verification FAILED".to_string() })?;
    }
    if agree {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}
