//! A seeded experiment over several n with CSV and plot-data output.

use simplicial_expansion::harness::{emit_plot_data, report_to_csv, run_experiment, ExperimentConfig, Measurement};

fn main() -> simplicial_expansion::Result<()> {
    let config = ExperimentConfig::with_eps(vec![10, 14, 18], 2, 1.0, 12, 2024).measuring(&[
        Measurement::Delta,
        Measurement::Lambda,
        Measurement::Phi,
    ]);
    let report = run_experiment(&config)?;
    print!("{}", report_to_csv(&report));
    for a in &report.aggregates {
        println!(
            "n = {} {:>6}: mean {:.3} sd {:.3}",
            a.n,
            a.measurement.name(),
            a.mean,
            a.stddev
        );
    }
    let dir = std::env::temp_dir().join("simplicial-expansion-plots");
    let files = emit_plot_data(&report, &dir)?;
    println!("plot data: {files:?}");
    println!("deterministic violations: {}", report.violations.deterministic());
    Ok(())
}
