//! Monte-Carlo checks against exact distributional oracles.

use simplicial_expansion::asymptotics::{a_eps, edge_probability, predict};
use simplicial_expansion::combinatorics::binomial;
use simplicial_expansion::harness::{run_experiment, ExperimentConfig, Measurement};
use simplicial_expansion::homology::adjacency_form_bound;
use simplicial_expansion::walk::{conductance_estimate, simulate};
use simplicial_expansion::{Complex, Face};

fn mean_and_var(xs: &[f64]) -> (f64, f64) {
    let m = xs.iter().sum::<f64>() / xs.len() as f64;
    let v = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
    (m, v)
}

#[test]
fn top_face_count_is_binomial() {
    let counts: Vec<f64> = (0..1000)
        .map(|s| Complex::generate(6, 2, 0.5, s).unwrap().num_top_faces() as f64)
        .collect();
    let (mean, var) = mean_and_var(&counts);
    // Bin(20, 1/2): mean 10, variance 5
    let se = (5.0f64 / 1000.0).sqrt();
    assert!((mean - 10.0).abs() < 3.0 * se, "mean {mean}");
    assert!((var - 5.0).abs() < 1.0, "variance {var}");
}

#[test]
fn link_edge_count_is_binomial() {
    let tau = Face::new(vec![0]).unwrap();
    let edges: Vec<f64> = (0..500)
        .map(|s| {
            Complex::generate(80, 2, 0.2, s)
                .unwrap()
                .link_graph(&tau)
                .unwrap()
                .num_edges() as f64
        })
        .collect();
    let (mean, _) = mean_and_var(&edges);
    // every pair avoiding vertex 0 is an independent potential edge
    let pairs = binomial(79, 2) as f64;
    let se = (pairs * 0.2 * 0.8 / 500.0).sqrt();
    assert!((mean - pairs * 0.2).abs() < 3.0 * se, "mean {mean} vs {}", pairs * 0.2);
}

/// `E[min]` of `count` independent Bin(trials, p) variables, by summing
/// `P(min > k)` with the pmf built by the ratio recurrence.
fn independent_min_mean(trials: usize, p: f64, count: u64) -> f64 {
    let mut pmf = (1.0 - p).powi(trials as i32);
    let mut cdf = 0.0;
    let mut mean = 0.0;
    for k in 0..trials {
        cdf += pmf;
        mean += (1.0 - cdf).powf(count as f64);
        pmf *= (trials - k) as f64 / (k + 1) as f64 * p / (1.0 - p);
    }
    mean
}

#[test]
fn min_codegree_at_200_matches_independent_minimum() {
    let n = 200;
    let p = edge_probability(n, 2, 1.0);
    let deltas: Vec<f64> = (0..30)
        .map(|s| Complex::generate(n, 2, p, 200 + s).unwrap().min_codegree() as f64)
        .collect();
    let (mean, _) = mean_and_var(&deltas);
    let oracle = independent_min_mean(n - 2, p, binomial(n, 2));
    assert!(
        (mean - oracle).abs() < 0.5,
        "mean δ {mean}, independent minimum {oracle}"
    );
    let pred = predict(n, 2, 1.0, 3.0).unwrap();
    let inside = deltas.iter().filter(|&&x| pred.contains(x)).count();
    assert!(inside >= 27, "{inside}/30 inside {}±{}", pred.center, pred.band);
}

/// δ / ((1+ε) a d log n) in [0.6, 1.4] for 90% of samples. Not met at
/// n = 200: δ sits near 1.5 times the log n scale there (7 of 30 inside).
#[test]
#[ignore = "the first-order scale undershoots δ by about half at n = 200"]
fn min_codegree_ratio_band_at_200() {
    let n = 200;
    let p = edge_probability(n, 2, 1.0);
    let scale = 2.0 * a_eps(1.0).unwrap() * 2.0 * (n as f64).ln();
    let inside = (0..30)
        .map(|s| Complex::generate(n, 2, p, s).unwrap().min_codegree() as f64 / scale)
        .filter(|r| (0.6..=1.4).contains(r))
        .count();
    assert!(inside >= 27, "{inside}/30 inside");
}

#[test]
fn link_adjacency_form_scales_with_sqrt_np() {
    // the link of a vertex in Y(101, 2, 0.3) is G(100, 0.3)
    let tau = Face::new(vec![0]).unwrap();
    let worst = (0..50)
        .map(|s| {
            let g = Complex::generate(101, 2, 0.3, s).unwrap().link_graph(&tau).unwrap();
            adjacency_form_bound(&g) / (100.0f64 * 0.3).sqrt()
        })
        .fold(0.0, f64::max);
    assert!(worst < 3.0, "max ratio {worst}");
    assert!(worst > 1.0, "max ratio {worst}");
}

#[test]
fn conductance_estimates_stay_positive() {
    let p = edge_probability(40, 2, 1.0);
    for s in 0..30 {
        let y = Complex::generate(40, 2, p, 40_000 + s).unwrap();
        let rep = conductance_estimate(&y, 200, s).unwrap();
        assert!(rep.phi > 0.05, "sample {s}: Φ̂ = {}", rep.phi);
    }
}

#[test]
fn walk_on_complete_complex_equidistributes() {
    let y = Complex::complete(5, 2).unwrap();
    let start = Face::new(vec![0, 1]).unwrap();
    let trace = simulate(&y, 0.0, &start, 100_000, 5, &[]).unwrap();
    assert!(trace.tv() < 0.02, "TV {}", trace.tv());
}

#[test]
fn independent_walks_both_equidistribute() {
    let y = Complex::from_faces(4, 2, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
    let start = Face::new(vec![0, 1]).unwrap();
    let a = simulate(&y, 0.3, &start, 100_000, 1, &[]).unwrap();
    let b = simulate(&y, 0.3, &start, 100_000, 2, &[]).unwrap();
    assert_ne!(a.visits, b.visits);
    assert!(a.tv() < 0.05 && b.tv() < 0.05, "TV {} and {}", a.tv(), b.tv());
}

#[test]
fn harness_delta_band() {
    let config = ExperimentConfig::with_eps(vec![60, 100, 140], 2, 1.0, 30, 77).measuring(&[Measurement::Delta]);
    let report = run_experiment(&config).unwrap();
    let inside = [60, 100, 140]
        .iter()
        .filter(|&&n| {
            let mean = report.aggregate(n, Measurement::Delta).unwrap().mean;
            report.prediction(n).unwrap().contains(mean)
        })
        .count();
    assert!(inside >= 2, "{inside}/3 means inside the band");
}
