use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::{Measurement, Report};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::param(format!("unknown format {other:?}, expected csv or json"))),
        }
    }
}

pub const CSV_HEADER: &str = "n,seed,delta,lambda,h,phi,center,band";

fn cell<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// One line per sample; absent measurements and predictions stay empty.
pub fn report_to_csv(report: &Report) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let pred = report.prediction(row.n);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.n,
            row.seed,
            cell(row.delta),
            cell(row.lambda),
            cell(row.h),
            cell(row.phi),
            cell(pred.map(|p| p.center)),
            cell(pred.map(|p| p.band)),
        )
        .expect("writing to a string");
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

pub fn export_report(report: &Report, format: ExportFormat, path: &Path) -> Result<()> {
    match format {
        ExportFormat::Csv => write_file(path, &report_to_csv(report)),
        ExportFormat::Json => export_json(report, path),
    }
}

/// Pretty JSON of the whole report. Wall times are not part of it, so
/// repeated runs of one configuration produce identical bytes.
pub fn export_json(report: &Report, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    write_file(path, &text)
}

pub fn import_json(path: &Path) -> Result<Report> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}

/// Per-sample wall times as CSV `n,index,measurement,seconds`.
pub fn export_timings(report: &Report, path: &Path) -> Result<()> {
    let mut out = String::from("n,index,measurement,seconds\n");
    for row in &report.rows {
        for (m, secs) in &row.timings {
            writeln!(out, "{},{},{},{}", row.n, row.index, m.name(), secs).expect("writing to a string");
        }
    }
    write_file(path, &out)
}

/// Measurements whose series carry the predicted center and band.
fn has_overlay(m: Measurement) -> bool {
    matches!(m, Measurement::Delta | Measurement::Lambda | Measurement::H)
}

/// Writes `<measurement>.dat` per aggregated measurement: whitespace
/// separated `n mean stddev`, plus `center band` for δ, λ and h when the
/// run has predictions. Returns the files written.
pub fn emit_plot_data(report: &Report, dir: &Path) -> Result<Vec<PathBuf>> {
    if report.aggregates.is_empty() {
        return Err(Error::param("report has no aggregates to plot"));
    }
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for m in Measurement::ALL {
        let series: Vec<_> = report.aggregates.iter().filter(|a| a.measurement == m).collect();
        if series.is_empty() {
            continue;
        }
        let overlay = has_overlay(m) && !report.predictions.is_empty();
        let mut out = String::new();
        if overlay {
            out.push_str("# n mean stddev center band\n");
        } else {
            out.push_str("# n mean stddev\n");
        }
        for a in series {
            write!(out, "{} {} {}", a.n, a.mean, a.stddev).expect("writing to a string");
            if overlay {
                match report.prediction(a.n) {
                    Some(p) => write!(out, " {} {}", p.center, p.band),
                    None => write!(out, " nan nan"),
                }
                .expect("writing to a string");
            }
            out.push('\n');
        }
        let path = dir.join(format!("{}.dat", m.name()));
        write_file(&path, &out)?;
        written.push(path);
    }
    Ok(written)
}

/// Writes every output named in the report's configuration.
pub fn write_outputs(report: &Report) -> Result<Vec<PathBuf>> {
    let out = &report.config.output;
    let mut written = Vec::new();
    if let Some(path) = &out.csv {
        export_report(report, ExportFormat::Csv, path)?;
        written.push(path.clone());
    }
    if let Some(path) = &out.json {
        export_json(report, path)?;
        written.push(path.clone());
    }
    if let Some(path) = &out.timings {
        export_timings(report, path)?;
        written.push(path.clone());
    }
    if let Some(dir) = &out.plot_dir {
        written.extend(emit_plot_data(report, dir)?);
    }
    Ok(written)
}
