//! Seeded parallel sampling of random complexes, measurement, aggregation
//! against the predicted concentration window, and persistence.

mod config;
mod report;

pub use config::{ExperimentConfig, Measurement, OutputPaths};
pub use report::{
    emit_plot_data, export_json, export_report, export_timings, import_json, report_to_csv, write_outputs, ExportFormat,
};

use std::time::Instant;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{predict, Prediction};
use crate::cheeger::{cheeger_exact, cheeger_from_min_codegree, EXACT_PARTITION_LIMIT};
use crate::combinatorics::{binomial, mix_pair, stirling2};
use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::homology::{adjacency_form_bound, cycle_space_basis, garland_check, spectral_gap, Cochain, DENSE_LIMIT};
use crate::walk::{conductance_estimate, conductance_exact, ConductanceMethod, Support, EXACT_SUPPORT_LIMIT};

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "SIMPLICIAL_EXPANSION_WORKERS";

/// Tolerance of the deterministic inequality checks.
pub const INEQUALITY_TOLERANCE: f64 = 1e-8;

/// Largest `C(n, d)` for which λ(Y) is attempted.
pub const LAMBDA_LIMIT: u64 = 20_000;

/// Garland residuals above this count as violations.
pub const GARLAND_TOLERANCE: f64 = 1e-9;

/// Seed of sample `index` at vertex count `n`.
pub fn sample_seed(master: u64, n: usize, index: usize) -> u64 {
    mix_pair(mix_pair(master, n as u64), index as u64)
}

/// Measurements of one sampled complex. Optional fields are absent when not
/// requested or when a size guard skipped them (listed in `skipped`).
/// Equality ignores wall times.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleRow {
    pub n: usize,
    pub index: usize,
    pub seed: u64,
    pub p: f64,
    pub top_faces: usize,
    pub delta: Option<usize>,
    pub lambda: Option<f64>,
    pub h: Option<f64>,
    /// Singleton-partition bound `n δ / (n − d)`.
    pub h_bound: Option<f64>,
    pub phi: Option<f64>,
    pub phi_method: Option<ConductanceMethod>,
    pub garland: Option<f64>,
    pub linkspec: Option<f64>,
    #[serde(default)]
    pub skipped: Vec<String>,
    /// Wall time in seconds per measurement; excluded from the JSON report.
    #[serde(skip)]
    pub timings: Vec<(Measurement, f64)>,
}

impl PartialEq for SampleRow {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.index, self.seed, self.top_faces, self.delta)
            == (other.n, other.index, other.seed, other.top_faces, other.delta)
            && self.p == other.p
            && (self.lambda, self.h, self.h_bound, self.phi) == (other.lambda, other.h, other.h_bound, other.phi)
            && (self.garland, self.linkspec, self.phi_method) == (other.garland, other.linkspec, other.phi_method)
            && self.skipped == other.skipped
    }
}

impl SampleRow {
    pub fn value(&self, m: Measurement) -> Option<f64> {
        match m {
            Measurement::Delta => self.delta.map(|v| v as f64),
            Measurement::Lambda => self.lambda,
            Measurement::H => self.h,
            Measurement::Phi => self.phi,
            Measurement::Garland => self.garland,
            Measurement::Linkspec => self.linkspec,
        }
    }
}

/// Summary of one measurement at one vertex count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub n: usize,
    pub measurement: Measurement,
    pub count: usize,
    pub mean: f64,
    pub stddev: f64,
    pub min: f64,
    pub max: f64,
}

/// Inequality counters. The deterministic ones hold on every complex with
/// complete skeleton; the probabilistic ones hold only with high probability.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violations {
    /// `λ > h + tol`.
    pub lambda_above_h: u64,
    /// `λ > n δ / (n − d) + tol`.
    pub lambda_above_codegree_bound: u64,
    /// `h > n δ / (n − d) + tol`.
    pub h_above_codegree_bound: u64,
    /// Garland residual above tolerance.
    pub garland: u64,
    /// `|δ − center| ≥ band`.
    pub delta_outside_band: u64,
    /// `λ < δ − band`.
    pub lambda_below_band: u64,
}

impl Violations {
    pub fn deterministic(&self) -> u64 {
        self.lambda_above_h + self.lambda_above_codegree_bound + self.h_above_codegree_bound + self.garland
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub rows: Vec<SampleRow>,
    pub aggregates: Vec<Aggregate>,
    /// One prediction per vertex count when the run is ε-parameterised.
    pub predictions: Vec<Prediction>,
    pub violations: Violations,
}

impl Report {
    pub fn prediction(&self, n: usize) -> Option<&Prediction> {
        self.predictions.iter().find(|p| p.n == n)
    }

    pub fn aggregate(&self, n: usize, m: Measurement) -> Option<&Aggregate> {
        self.aggregates.iter().find(|a| a.n == n && a.measurement == m)
    }
}

fn worker_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let workers: usize = raw
            .trim()
            .parse()
            .map_err(|_| Error::param(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
        builder = builder.num_threads(workers.max(1));
    }
    builder
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))
}

/// Runs every sample of the configuration. Output depends only on the
/// configuration: samples are seeded individually and sorted before
/// aggregation.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Report> {
    config.validate()?;
    let jobs: Vec<(usize, usize)> = config
        .n_values
        .iter()
        .flat_map(|&n| (0..config.samples).map(move |i| (n, i)))
        .collect();
    let pool = worker_pool()?;
    let mut rows = pool.install(|| {
        jobs.par_iter()
            .map(|&(n, i)| measure_sample(config, n, i))
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by_key(|r| (r.n, r.index));

    let predictions = match config.eps {
        Some(eps) => config
            .n_values
            .iter()
            .map(|&n| predict(n, config.d, eps, config.band_constant))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let aggregates = aggregate(config, &rows);
    let violations = count_violations(config, &rows, &predictions);
    Ok(Report {
        config: config.clone(),
        rows,
        aggregates,
        predictions,
        violations,
    })
}

fn timed<T>(timings: &mut Vec<(Measurement, f64)>, m: Measurement, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push((m, start.elapsed().as_secs_f64()));
    out
}

fn measure_sample(config: &ExperimentConfig, n: usize, index: usize) -> Result<SampleRow> {
    let d = config.d;
    let seed = sample_seed(config.master_seed, n, index);
    let p = config.probability(n);
    let y = Complex::generate(n, d, p, seed)?;
    let mut row = SampleRow {
        n,
        index,
        seed,
        p,
        top_faces: y.num_top_faces(),
        delta: None,
        lambda: None,
        h: None,
        h_bound: None,
        phi: None,
        phi_method: None,
        garland: None,
        linkspec: None,
        skipped: Vec::new(),
        timings: Vec::new(),
    };
    let mut timings = Vec::new();

    if config.wants(Measurement::Delta) {
        row.delta = Some(timed(&mut timings, Measurement::Delta, || y.min_codegree()));
    }
    if config.wants(Measurement::Lambda) {
        if binomial(n, d) <= LAMBDA_LIMIT {
            row.lambda = Some(timed(&mut timings, Measurement::Lambda, || spectral_gap(&y))?.lambda);
        } else {
            row.skipped
                .push(format!("lambda: C(n, d) = {} exceeds {LAMBDA_LIMIT}", binomial(n, d)));
        }
    }
    if config.wants(Measurement::H) {
        row.h_bound = Some(cheeger_from_min_codegree(&y)?.h);
        let partitions = stirling2(n, d + 1);
        if partitions <= EXACT_PARTITION_LIMIT {
            row.h = Some(timed(&mut timings, Measurement::H, || cheeger_exact(&y))?.h);
        } else {
            row.skipped
                .push(format!("h: S(n, d+1) = {partitions} exceeds {EXACT_PARTITION_LIMIT}"));
        }
    }
    if config.wants(Measurement::Phi) {
        let support = Support::of(&y).len();
        if support < 2 {
            row.skipped.push(format!("phi: support of {support} faces"));
        } else {
            let report = timed(&mut timings, Measurement::Phi, || {
                if support <= EXACT_SUPPORT_LIMIT {
                    conductance_exact(&y)
                } else {
                    conductance_estimate(&y, config.phi_trials, seed)
                }
            })?;
            row.phi = Some(report.phi);
            row.phi_method = Some(report.method);
        }
    }
    if config.wants(Measurement::Garland) {
        if d < 2 {
            row.skipped.push("garland: needs d >= 2".into());
        } else if binomial(n, d) > DENSE_LIMIT as u64 {
            row.skipped.push(format!("garland: C(n, d) exceeds {DENSE_LIMIT}"));
        } else {
            let residual = timed(&mut timings, Measurement::Garland, || -> Result<f64> {
                let basis = cycle_space_basis(&y)?.basis;
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a72_6c61);
                let coeffs = DVector::from_fn(basis.ncols(), |_, _| rng.gen_range(-1.0..1.0));
                let f = Cochain::from_values(&y, (basis * coeffs).iter().copied().collect())?;
                Ok(garland_check(&y, &f)?.max_residual())
            })?;
            row.garland = Some(residual);
        }
    }
    if config.wants(Measurement::Linkspec) {
        if d < 2 {
            row.skipped.push("linkspec: needs d >= 2".into());
        } else if p <= 0.0 {
            row.skipped.push("linkspec: p = 0".into());
        } else {
            let value = timed(&mut timings, Measurement::Linkspec, || -> Result<f64> {
                let tau = Face::from_sorted((0..d - 1).collect())?;
                let lk = y.link_graph(&tau)?;
                Ok(adjacency_form_bound(&lk) / (n as f64 * p).sqrt())
            })?;
            row.linkspec = Some(value);
        }
    }
    row.timings = timings;
    Ok(row)
}

fn aggregate(config: &ExperimentConfig, rows: &[SampleRow]) -> Vec<Aggregate> {
    let mut out = Vec::new();
    for &n in &config.n_values {
        for m in Measurement::ALL.into_iter().filter(|&m| config.wants(m)) {
            let values: Vec<f64> = rows.iter().filter(|r| r.n == n).filter_map(|r| r.value(m)).collect();
            if values.is_empty() {
                continue;
            }
            let count = values.len() as f64;
            let mean = values.iter().sum::<f64>() / count;
            let var = if values.len() > 1 {
                values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1.0)
            } else {
                0.0
            };
            out.push(Aggregate {
                n,
                measurement: m,
                count: values.len(),
                mean,
                stddev: var.sqrt(),
                min: values.iter().copied().fold(f64::INFINITY, f64::min),
                max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            });
        }
    }
    out
}

fn count_violations(config: &ExperimentConfig, rows: &[SampleRow], predictions: &[Prediction]) -> Violations {
    let mut v = Violations::default();
    let tol = INEQUALITY_TOLERANCE;
    let d = config.d as f64;
    for row in rows {
        let n = row.n as f64;
        let bound = row.delta.map(|delta| n * delta as f64 / (n - d));
        if let (Some(l), Some(h)) = (row.lambda, row.h) {
            v.lambda_above_h += (l > h + tol) as u64;
        }
        if let (Some(l), Some(b)) = (row.lambda, bound) {
            v.lambda_above_codegree_bound += (l > b + tol) as u64;
        }
        if let (Some(h), Some(b)) = (row.h, bound) {
            v.h_above_codegree_bound += (h > b + tol) as u64;
        }
        if let Some(g) = row.garland {
            v.garland += (g > GARLAND_TOLERANCE) as u64;
        }
        if let Some(pred) = predictions.iter().find(|p| p.n == row.n) {
            if let Some(delta) = row.delta {
                v.delta_outside_band += (!pred.contains(delta as f64)) as u64;
                if let Some(l) = row.lambda {
                    v.lambda_below_band += (l < delta as f64 - pred.band) as u64;
                }
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_has_no_deterministic_violations() {
        let config = ExperimentConfig::with_eps(vec![8], 2, 1.0, 5, 11).measuring(&[
            Measurement::Delta,
            Measurement::Lambda,
            Measurement::H,
        ]);
        let r = run_experiment(&config).unwrap();
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.violations.deterministic(), 0);
        assert_eq!(r.predictions.len(), 1);
        assert!(r.aggregate(8, Measurement::H).is_some());
    }

    #[test]
    fn zero_probability_rows() {
        let config = ExperimentConfig::with_p(vec![7], 2, 0.0, 3, 1).measuring(&[
            Measurement::Delta,
            Measurement::Lambda,
            Measurement::H,
        ]);
        let r = run_experiment(&config).unwrap();
        for row in &r.rows {
            assert_eq!(row.delta, Some(0));
            assert_eq!(row.lambda, Some(0.0));
            assert_eq!(row.h, Some(0.0));
        }
        assert!(r.predictions.is_empty());
    }

    #[test]
    fn seeds_are_distinct() {
        assert_ne!(sample_seed(1, 10, 0), sample_seed(1, 10, 1));
        assert_ne!(sample_seed(1, 10, 0), sample_seed(1, 11, 0));
        assert_ne!(sample_seed(1, 10, 0), sample_seed(2, 10, 0));
    }

    #[test]
    fn all_measurements_run() {
        let config = ExperimentConfig::with_p(vec![7], 2, 0.5, 2, 3).measuring(&Measurement::ALL);
        let r = run_experiment(&config).unwrap();
        for row in &r.rows {
            assert!(row.garland.unwrap() <= GARLAND_TOLERANCE);
            assert!(row.phi.is_some() && row.linkspec.is_some());
            assert_eq!(row.timings.len(), 6);
        }
        assert_eq!(r.violations.deterministic(), 0);
    }
}
