//! Triangle-count estimation by uniform vertex sampling.
//!
//! Each vertex is kept independently with probability `p`; the triangles `Z`
//! of the induced sample are counted exactly and scaled by `p⁻³`, which is an
//! unbiased estimate of the true count `t` since each triangle survives with
//! probability `p³`.

use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MATRIX_BUDGET};
use crate::triangles::{count_matrix, detect_matrix, list_chiba_nishizeki, Triangle};

/// Exponent in the edge-density condition `m ≥ n^{1 + 3.82δ}` under which the
/// estimator's concentration guarantee applies.
pub const DENSITY_EXPONENT: f64 = 3.82;

/// Sampling configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxParams<F> {
    /// Sampling exponent; `p = n^{-delta}` unless overridden. Must lie in `(0, 0.25]`.
    pub delta: F,
    /// Target relative accuracy, `(0, 0.5]`. Informational: it does not alter sampling.
    pub epsilon: F,
    pub seed: u64,
    pub trials: usize,
    pub p_override: Option<F>,
    /// Samples with more vertices than this are counted without a matrix.
    pub matrix_budget: usize,
}

impl<F: Float> ApproxParams<F> {
    pub fn new(delta: F, epsilon: F, seed: u64) -> Self {
        Self {
            delta,
            epsilon,
            seed,
            trials: 1,
            p_override: None,
            matrix_budget: DEFAULT_MATRIX_BUDGET,
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_p(mut self, p: F) -> Self {
        self.p_override = Some(p);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let quarter = F::from(0.25).unwrap();
        let half = F::from(0.5).unwrap();
        if !(self.delta > F::zero() && self.delta <= quarter) {
            return Err(Error::ParamOutOfRange(format!(
                "delta must lie in (0, 0.25], got {}",
                to_f64(self.delta)
            )));
        }
        if !(self.epsilon > F::zero() && self.epsilon <= half) {
            return Err(Error::ParamOutOfRange(format!(
                "epsilon must lie in (0, 0.5], got {}",
                to_f64(self.epsilon)
            )));
        }
        if self.trials == 0 {
            return Err(Error::ParamOutOfRange("trials must be at least 1".into()));
        }
        if let Some(p) = self.p_override {
            if !(p > F::zero() && p <= F::one()) {
                return Err(Error::InvalidProbability(to_f64(p)));
            }
        }
        Ok(())
    }

    /// `p_override`, else `n^{-delta}` (1 for graphs with at most one vertex).
    pub fn sampling_probability(&self, n: usize) -> F {
        match self.p_override {
            Some(p) => p,
            None if n <= 1 => F::one(),
            None => F::from(n).unwrap().powf(-self.delta),
        }
    }
}

fn to_f64<F: Float>(x: F) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// One sampling trial: `X = |U|`, `Y = |E(G[U])|`, `Z` = triangles of `G[U]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialSample<F> {
    pub sample_size: usize,
    pub induced_edges: usize,
    pub induced_triangles: u64,
    /// `Z · p⁻³`.
    pub estimate: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxResult<F> {
    /// Mean of the per-trial estimates.
    pub estimate: F,
    pub p_used: F,
    pub seed: u64,
    pub trials: Vec<TrialSample<F>>,
    /// Triangle from the first trial with `Z > 0`, in original vertex ids.
    pub witness: Option<Triangle>,
    pub warnings: Vec<String>,
}

/// Keeps each vertex independently with probability `p`.
pub fn sample_vertices<F: Float, R: Rng + ?Sized>(g: &Graph, p: F, rng: &mut R) -> Result<Vec<usize>> {
    let p = to_f64(p);
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok((0..g.n()).filter(|_| rng.gen::<f64>() < p).collect())
}

/// Generator for trial `index` under `seed`: one ChaCha stream per trial.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

struct TrialOutcome {
    x: usize,
    y: usize,
    z: u64,
    witness: Option<Triangle>,
}

fn run_trial<F: Float>(g: &Graph, p: F, rng: &mut ChaCha8Rng, matrix_budget: usize, want_witness: bool) -> Result<TrialOutcome> {
    let sample = sample_vertices(g, p, rng)?;
    let (h, mapping) = g.induced_subgraph(&sample)?;
    let (x, y) = (h.n(), h.m());
    let remap = |t: Triangle| Triangle::new(mapping[t.i], mapping[t.j], mapping[t.k]);
    let (z, witness) = if x <= matrix_budget {
        let h = h.build_matrix_with_budget(matrix_budget)?;
        let z = count_matrix(&h)?;
        let witness = if want_witness && z > 0 {
            detect_matrix(&h)?.map(remap)
        } else {
            None
        };
        (z, witness)
    } else {
        let mut first = None;
        let report = list_chiba_nishizeki(&h, |t| {
            first.get_or_insert(t);
        });
        (report.triangles_emitted, first.filter(|_| want_witness).map(remap))
    };
    Ok(TrialOutcome { x, y, z, witness })
}

/// Runs `params.trials` independent sampling trials and averages `Z · p⁻³`.
pub fn approx_count<F: Float>(g: &Graph, params: &ApproxParams<F>) -> Result<ApproxResult<F>> {
    params.validate()?;
    let p = params.sampling_probability(g.n());
    let scale = p.powi(3).recip();
    let mut trials = Vec::with_capacity(params.trials);
    let mut witness = None;
    for index in 0..params.trials {
        let mut rng = trial_rng(params.seed, index as u64);
        let outcome = run_trial(g, p, &mut rng, params.matrix_budget, witness.is_none())?;
        if witness.is_none() {
            witness = outcome.witness;
        }
        trials.push(TrialSample {
            sample_size: outcome.x,
            induced_edges: outcome.y,
            induced_triangles: outcome.z,
            estimate: F::from(outcome.z).unwrap() * scale,
        });
    }
    let estimate = trials
        .iter()
        .fold(F::zero(), |acc, t| acc + t.estimate)
        / F::from(trials.len()).unwrap();
    let warnings = precondition_warnings(g, to_f64(params.delta), to_f64(estimate), params.p_override.is_some());
    Ok(ApproxResult {
        estimate,
        p_used: p,
        seed: params.seed,
        trials,
        witness,
        warnings,
    })
}

/// Diagnostics for the density conditions `m ≥ n^{1+3.82δ}` and `t ≥ m^{1+δ}`
/// (the latter judged against the estimate). The estimator runs regardless.
fn precondition_warnings(g: &Graph, delta: f64, estimate: f64, overridden: bool) -> Vec<String> {
    let mut warnings = Vec::new();
    if overridden || g.n() <= 1 {
        return warnings;
    }
    let (n, m) = (g.n() as f64, g.m() as f64);
    let edge_floor = n.powf(1.0 + DENSITY_EXPONENT * delta);
    if m < edge_floor {
        warnings.push(format!(
            "m = {} is below n^(1+{DENSITY_EXPONENT}δ) ≈ {edge_floor:.1}; accuracy guarantee does not apply",
            g.m()
        ));
    }
    let triangle_floor = m.powf(1.0 + delta);
    if estimate < triangle_floor {
        warnings.push(format!(
            "estimated triangle count {estimate:.1} is below m^(1+δ) ≈ {triangle_floor:.1}; accuracy guarantee does not apply"
        ));
    }
    warnings
}

/// Repeats single sampling trials until one finds a triangle.
///
/// `None` after `max_rounds` attempts does not certify that `g` is triangle-free.
pub fn detect_via_sampling<F: Float>(g: &Graph, params: &ApproxParams<F>, max_rounds: usize) -> Result<Option<Triangle>> {
    params.validate()?;
    if max_rounds == 0 {
        return Err(Error::ParamOutOfRange("max_rounds must be at least 1".into()));
    }
    let p = params.sampling_probability(g.n());
    for round in 0..max_rounds {
        let mut rng = trial_rng(params.seed, round as u64);
        if let Some(t) = run_trial(g, p, &mut rng, params.matrix_budget, true)?.witness {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Upper bound `t·p³ + 6tm·p⁵ + 6tn·p⁴` on the variance of the sampled triangle count `Z`.
pub fn variance_bound<F: Float>(n: u64, m: u64, t: u64, p: F) -> F {
    let c = |x: u64| F::from(x).unwrap();
    let six = c(6);
    c(t) * p.powi(3) + six * c(t) * c(m) * p.powi(5) + six * c(t) * c(n) * p.powi(4)
}
