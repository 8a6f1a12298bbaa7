//! Monte-Carlo checks of the sampling estimator against binomial moments.

mod common;

use common::*;
use trigraph::approx::{approx_count, detect_via_sampling, sample_vertices, trial_rng, variance_bound, ApproxParams};
use trigraph::generators::{gen_clique_plus, gen_random};
use trigraph::triangles::brute_force_list;
use trigraph::Graph;

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

#[test]
fn sample_size_matches_binomial_moments() {
    let g = Graph::empty(10_000);
    let sizes: Vec<f64> = (0..1000)
        .map(|i| sample_vertices(&g, 0.5, &mut trial_rng(42, i)).unwrap().len() as f64)
        .collect();
    let (mean, _) = mean_var(&sizes);
    let sigma = (10_000f64 * 0.5 * 0.5).sqrt();
    // standard error of the mean of 1000 draws
    assert!((mean - 5000.0).abs() <= 3.0 * sigma / 1000f64.sqrt(), "mean {mean}");
}

#[test]
fn edge_and_vertex_moments() {
    let g = gen_random(200, 3000, 5).unwrap().graph;
    let p = 0.4;
    let runs = 800;
    let r = approx_count(&g, &ApproxParams::new(0.1, 0.5, 17).with_p(p).with_trials(runs)).unwrap();
    let xs: Vec<f64> = r.trials.iter().map(|t| t.sample_size as f64).collect();
    let ys: Vec<f64> = r.trials.iter().map(|t| t.induced_edges as f64).collect();
    let (mx, vx) = mean_var(&xs);
    let (my, vy) = mean_var(&ys);
    let se = |v: f64| (v / runs as f64).sqrt();
    assert!((mx - 200.0 * p).abs() <= 3.0 * se(vx), "E[X]: {mx}");
    assert!((my - 3000.0 * p * p).abs() <= 3.0 * se(vy), "E[Y]: {my}");
}

#[test]
fn unbiased_on_dense_random_graph() {
    let g = gen_clique_plus(60, 900).unwrap().graph;
    let t = brute_force_list(&g).len() as f64;
    let runs = 1000;
    let r = approx_count(&g, &ApproxParams::new(0.2, 0.5, 3).with_trials(runs)).unwrap();
    let ests: Vec<f64> = r.trials.iter().map(|s| s.estimate).collect();
    let (mean, var) = mean_var(&ests);
    assert!((mean - t).abs() <= 3.0 * (var / runs as f64).sqrt(), "mean {mean} vs {t}");
    assert_eq!(r.estimate, mean_var(&ests).0);
    let zs: Vec<f64> = r.trials.iter().map(|s| s.induced_triangles as f64).collect();
    let bound = variance_bound(g.n() as u64, g.m() as u64, t as u64, r.p_used);
    assert!(mean_var(&zs).1 <= bound);
}

#[test]
fn witnesses_are_valid_and_consistent() {
    let g = gen_random(80, 900, 11).unwrap().graph;
    for seed in 0..40 {
        let r = approx_count(&g, &ApproxParams::new(0.25, 0.5, seed).with_trials(3)).unwrap();
        let any_hit = r.trials.iter().any(|t| t.induced_triangles > 0);
        assert_eq!(r.witness.is_some(), any_hit);
        if let Some(w) = r.witness {
            assert!(w.is_valid_in(&g));
        }
    }
}

#[test]
fn sampling_detection_on_k50() {
    let g = complete(50);
    for seed in 0..20 {
        let t = detect_via_sampling(&g, &ApproxParams::new(0.1, 0.5, seed), 50).unwrap();
        assert!(t.expect("K_50 always yields a triangle").is_valid_in(&g));
    }
    let c = complete_bipartite(20, 20);
    assert_eq!(detect_via_sampling(&c, &ApproxParams::new(0.1, 0.5, 1), 30).unwrap(), None);
}

#[test]
fn single_precision_estimator() {
    let g = complete(30);
    let r = approx_count(&g, &ApproxParams::new(0.2f32, 0.5, 8).with_p(1.0)).unwrap();
    assert_eq!(r.estimate, 4060.0f32);
}
