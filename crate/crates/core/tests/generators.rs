mod common;

use common::*;
use trigraph::generators::{gen_clique_plus, gen_layered_cliques, Derivation};
use trigraph::triangles::brute_force_list;

#[test]
fn clique_plus_certificates_are_sound() {
    for n in 3..=24usize {
        for m in 3..=n * (n - 1) / 2 {
            if m % 3 != 0 && m != n * (n - 1) / 2 {
                continue;
            }
            let inst = gen_clique_plus(n, m).unwrap();
            assert_eq!((inst.graph.n(), inst.graph.m()), (n, m));
            inst.graph.check_invariants().unwrap();
            let cert = inst.certificate.unwrap();
            assert_eq!(cert.derivation, Derivation::CliquePlus);
            assert_eq!(cert.triangles, brute_force_list(&inst.graph).len() as u64, "n={n} m={m}");
        }
    }
}

#[test]
fn clique_plus_higher_cliques() {
    for (n, m) in [(10, 21), (12, 40), (9, 30)] {
        let inst = gen_clique_plus(n, m).unwrap();
        let cert = inst.certificate.unwrap();
        for ell in 3..=6 {
            assert_eq!(cert.cliques[&ell], brute_force_cliques(&inst.graph, ell).len() as u64, "n={n} m={m} ell={ell}");
        }
    }
}

#[test]
fn layered_cliques_certificates_are_sound() {
    for b in [2, 4, 6] {
        for k in 1..=4 {
            let inst = gen_layered_cliques(k, b).unwrap();
            let g = &inst.graph;
            g.check_invariants().unwrap();
            assert_eq!(g.n(), k * b + b / 2);
            assert_eq!(g.m(), k * b * (b - 1) / 2 + k * b * b / 2);
            let cert = inst.certificate.unwrap();
            assert_eq!(cert.triangles, brute_force_list(g).len() as u64);
            for ell in 4..=(b + 1).min(6) {
                assert_eq!(cert.cliques[&ell], brute_force_cliques(g, ell).len() as u64, "k={k} b={b} ell={ell}");
            }
        }
    }
}

#[test]
fn clique_plus_growth_on_complete_family() {
    // with m = C(n, 2) the construction is K_n
    let ratios: Vec<f64> = (10..=60)
        .step_by(5)
        .map(|n| {
            let m = n * (n - 1) / 2;
            let t = gen_clique_plus(n, m).unwrap().certificate.unwrap().triangles;
            assert_eq!(gen_clique_plus(n, m).unwrap().graph, complete(n));
            t as f64 / (m as f64).powf(1.5)
        })
        .collect();
    let (lo, hi) = ratios.iter().fold((f64::MAX, 0f64), |(a, b), &r| (a.min(r), b.max(r)));
    assert!(lo > 0.0 && hi <= 2f64.sqrt() / 3.0 && hi / lo < 2.0, "{ratios:?}");
}
