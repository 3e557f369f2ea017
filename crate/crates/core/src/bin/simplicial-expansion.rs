use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use simplicial_expansion::asymptotics::{edge_probability, predict, DEFAULT_BAND};
use simplicial_expansion::cheeger::{cheeger_exact, cheeger_from_min_codegree, EXACT_PARTITION_LIMIT};
use simplicial_expansion::combinatorics::stirling2;
use simplicial_expansion::harness::{
    export_report, run_experiment, write_outputs, ExperimentConfig, ExportFormat, Measurement,
};
use simplicial_expansion::homology::spectral_gap;
use simplicial_expansion::walk::{conductance_estimate, conductance_exact, simulate, Support, EXACT_SUPPORT_LIMIT};
use simplicial_expansion::{Complex, Error, Face};

/// Random simplicial complexes and their expansion measures.
#[derive(Parser)]
#[command(name = "simplicial-expansion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a complex and write it as JSON.
    Generate(Source),
    /// Spectral gap, cycle and harmonic dimensions.
    Spectrum(Source),
    /// Cheeger constant by exact enumeration, or the co-degree bound when too large.
    Cheeger(Source),
    /// Conductance of the face walk, exact or estimated.
    Conductance {
        #[command(flatten)]
        source: Source,
        /// Sets sampled by the estimator.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Run the estimator even when exact enumeration is feasible.
        #[arg(long)]
        estimate: bool,
    },
    /// Simulate the lazy walk and report distances to stationarity.
    Walk {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
    },
    /// Predicted concentration window for the minimum co-degree.
    Predict {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long)]
        eps: f64,
        /// Band constant C in C·√(log n).
        #[arg(long, default_value_t = DEFAULT_BAND)]
        band: f64,
    },
    /// Run a sampled experiment from a config file or flags.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct Source {
    /// Read the complex from this JSON file instead of sampling.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Sample at p = (1+eps) d log n / n.
    #[arg(long, conflicts_with = "p")]
    eps: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Source {
    fn complex(&self) -> Result<Complex, Failure> {
        if let Some(path) = &self.input {
            return Ok(Complex::read(path)?);
        }
        let n = self.n.ok_or_else(|| Failure::usage("give --input or --n"))?;
        let p = match (self.eps, self.p) {
            (Some(eps), None) => edge_probability(n, self.d, eps).min(1.0),
            (None, Some(p)) => p,
            _ => return Err(Failure::usage("give exactly one of --eps and --p")),
        };
        Ok(Complex::generate(n, self.d, p, self.seed)?)
    }
}

#[derive(Args)]
struct ExperimentArgs {
    /// JSON file with ExperimentConfig fields; other flags are ignored.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, conflicts_with = "p")]
    eps: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,
    /// Comma-separated subset of delta,lambda,h,phi,garland,linkspec.
    #[arg(long, value_delimiter = ',', default_value = "delta,lambda,h")]
    measure: Vec<String>,
    /// Report file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
}

impl ExperimentArgs {
    fn config(&self) -> Result<ExperimentConfig, Failure> {
        if let Some(path) = &self.config {
            return Ok(ExperimentConfig::read(path)?);
        }
        if self.n.is_empty() {
            return Err(Failure::usage("give --config or --n"));
        }
        let measurements = self
            .measure
            .iter()
            .map(|m| Measurement::parse(m.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut config = match (self.eps, self.p) {
            (Some(eps), None) => ExperimentConfig::with_eps(self.n.clone(), self.d, eps, self.samples, self.seed),
            (None, Some(p)) => ExperimentConfig::with_p(self.n.clone(), self.d, p, self.samples, self.seed),
            _ => return Err(Failure::usage("give exactly one of --eps and --p")),
        }
        .measuring(&measurements);
        config.gamma = self.gamma;
        config.validate()?;
        Ok(config)
    }
}

/// A failed command and the exit code it maps to.
enum Failure {
    Usage(String),
    Violation(String),
}

impl Failure {
    fn usage(msg: &str) -> Self {
        Failure::Usage(msg.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)? + "\n";
    write_text(&text, out)
}

fn write_text(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}"))),
    }
}

#[derive(Serialize)]
struct CheegerOutput {
    #[serde(flatten)]
    result: simplicial_expansion::cheeger::CheegerResult,
    exact: bool,
    /// Singleton-partition bound `n δ / (n − d)`.
    codegree_bound: f64,
}

#[derive(Serialize)]
struct WalkOutput {
    gamma: f64,
    steps: usize,
    start: Face,
    end: Face,
    checkpoints: Vec<simplicial_expansion::walk::Checkpoint>,
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate(src) => {
            let y = src.complex()?;
            write_text(&(y.to_json() + "\n"), src.out.as_ref())
        }
        Command::Spectrum(src) => {
            let y = src.complex()?;
            let report = spectral_gap(&y)?;
            if report.lambda < -1e-8 || (report.lambda < 1e-8) != (report.harmonic_dim > 0) {
                emit(&report, src.out.as_ref())?;
                return Err(Failure::Violation("λ and the harmonic dimension disagree".into()));
            }
            emit(&report, src.out.as_ref())
        }
        Command::Cheeger(src) => {
            let y = src.complex()?;
            let bound = cheeger_from_min_codegree(&y)?;
            let exact = stirling2(y.n(), y.d() + 1) <= EXACT_PARTITION_LIMIT;
            let result = if exact { cheeger_exact(&y)? } else { bound.clone() };
            let out = CheegerOutput {
                exact,
                codegree_bound: bound.h,
                result,
            };
            emit(&out, src.out.as_ref())?;
            if out.result.h > out.codegree_bound + 1e-12 {
                return Err(Failure::Violation("h exceeds the co-degree bound".into()));
            }
            Ok(())
        }
        Command::Conductance {
            source,
            samples,
            estimate,
        } => {
            let y = source.complex()?;
            let support = Support::of(&y).len();
            let report = if estimate || support > EXACT_SUPPORT_LIMIT {
                conductance_estimate(&y, samples, source.seed)?
            } else {
                conductance_exact(&y)?
            };
            emit(&report, source.out.as_ref())
        }
        Command::Walk { source, gamma, steps } => {
            let y = source.complex()?;
            let support = Support::of(&y);
            if support.is_empty() {
                return Err(Failure::usage("the complex has no top faces"));
            }
            let start = y.ridge(support.rank(0));
            let marks: Vec<usize> = std::iter::successors(Some(10usize), |&s| s.checked_mul(10))
                .take_while(|&s| s < steps)
                .collect();
            let trace = simulate(&y, gamma, &start, steps, source.seed, &marks)?;
            emit(
                &WalkOutput {
                    gamma,
                    steps,
                    start,
                    end: trace.end,
                    checkpoints: trace.checkpoints,
                },
                source.out.as_ref(),
            )
        }
        Command::Predict { n, d, eps, band } => emit(&predict(n, d, eps, band)?, None),
        Command::Experiment(args) => {
            let config = args.config()?;
            let format = ExportFormat::parse(&args.format)?;
            let report = run_experiment(&config)?;
            write_outputs(&report)?;
            match &args.out {
                Some(path) => export_report(&report, format, path)?,
                None => {
                    let text = match format {
                        ExportFormat::Csv => simplicial_expansion::harness::report_to_csv(&report),
                        ExportFormat::Json => serde_json::to_string_pretty(&report).map_err(Error::from)? + "\n",
                    };
                    write_text(&text, None)?;
                }
            }
            let v = &report.violations;
            eprintln!(
                "samples: {}, deterministic violations: {}, δ outside band: {}, λ below band: {}",
                report.rows.len(),
                v.deterministic(),
                v.delta_outside_band,
                v.lambda_below_band
            );
            if v.deterministic() > 0 {
                return Err(Failure::Violation(format!(
                    "{} deterministic violations",
                    v.deterministic()
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(2)
        }
    }
}
