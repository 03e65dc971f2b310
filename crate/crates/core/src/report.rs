//! Machine-readable output records.
//!
//! Floats are written in their shortest round-trip form, so parsing CSV or
//! JSON output recovers every value bit for bit.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::gainmodel::{GainMediumSpec, MinRadius};
use crate::solver::{Enumeration, Method, Peak, ScanResult, SolverError};
use crate::units::nm_to_mm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (csv|json)")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeStatus {
    /// Refined to an exact root.
    Converged,
    /// Refinement not requested.
    Seed,
    NoConvergence,
    ModeJump,
    Failed,
}

impl ModeStatus {
    pub fn is_failure(self) -> bool {
        matches!(self, Self::NoConvergence | Self::ModeJump | Self::Failed)
    }
}

/// One row of the singularity table, in critical-gain order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityRow {
    pub l: usize,
    pub m: u64,
    pub g0_per_cm: f64,
    pub lambda_pert_nm: f64,
    pub lambda_exact_nm: Option<f64>,
    pub kappa0: f64,
    pub x: f64,
    pub residual_mag: f64,
    pub method: Method,
    pub status: ModeStatus,
}

pub fn singularity_rows(modes: &Enumeration) -> Vec<SingularityRow> {
    modes
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let best = e.best();
            let status = match &e.exact {
                None => ModeStatus::Seed,
                Some(Ok(_)) => ModeStatus::Converged,
                Some(Err(SolverError::NoConvergence { .. })) => ModeStatus::NoConvergence,
                Some(Err(SolverError::ModeJump { .. })) => ModeStatus::ModeJump,
                Some(Err(_)) => ModeStatus::Failed,
            };
            SingularityRow {
                l: i + 1,
                m: e.seed.m,
                g0_per_cm: best.g0_per_cm,
                lambda_pert_nm: e.seed.lambda_nm,
                lambda_exact_nm: (status == ModeStatus::Converged).then_some(best.lambda_nm),
                kappa0: best.kappa0,
                x: best.x,
                residual_mag: best.residual_mag,
                method: best.method,
                status,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub lambda_nm: f64,
    pub r: f64,
    pub log10_r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub g0_per_cm: f64,
    pub samples: Vec<SampleRow>,
    pub peaks: Vec<Peak>,
}

impl From<&ScanResult> for ScanReport {
    fn from(scan: &ScanResult) -> Self {
        Self {
            g0_per_cm: scan.g0_per_cm,
            samples: scan
                .samples
                .iter()
                .map(|s| SampleRow {
                    lambda_nm: s.lambda_nm,
                    r: s.r,
                    log10_r: s.r.log10(),
                })
                .collect(),
            peaks: scan.peaks.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinRadiusRow {
    pub medium: String,
    pub g0_max_per_cm: f64,
    pub radius_mm: f64,
    pub m: u64,
    pub lambda_nm: f64,
    pub envelope_mm: f64,
}

impl MinRadiusRow {
    pub fn new(medium: &GainMediumSpec, r: &MinRadius) -> Self {
        Self {
            medium: medium.name.clone(),
            g0_max_per_cm: medium.g0_max_per_cm,
            radius_mm: nm_to_mm(r.radius_nm),
            m: r.m,
            lambda_nm: r.lambda_nm,
            envelope_mm: nm_to_mm(r.envelope_nm),
        }
    }
}

pub fn write_csv<T: Serialize>(out: impl Write, rows: &[T]) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Like [`write_csv`], but writes the header even when `rows` is empty.
pub fn write_csv_with_header<T: Serialize>(
    mut out: impl Write,
    header: &[&str],
    rows: &[T],
) -> Result<(), ReportError> {
    if rows.is_empty() {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(header)?;
        w.flush()?;
        return Ok(());
    }
    write_csv(out, rows)
}

pub fn write_json<T: Serialize + ?Sized>(mut out: impl Write, value: &T) -> Result<(), ReportError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn read_csv<T: serde::de::DeserializeOwned>(text: &str) -> Result<Vec<T>, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

pub const SINGULARITY_HEADER: [&str; 10] = [
    "l",
    "m",
    "g0_per_cm",
    "lambda_pert_nm",
    "lambda_exact_nm",
    "kappa0",
    "x",
    "residual_mag",
    "method",
    "status",
];

pub const SAMPLE_HEADER: [&str; 3] = ["lambda_nm", "r", "log10_r"];
pub const PEAK_HEADER: [&str; 4] = ["lambda_nm", "r", "r_refined", "kind"];

/// Samples as CSV, then a blank line and the peak table.
pub fn write_scan_csv(mut out: impl Write, report: &ScanReport) -> Result<(), ReportError> {
    write_csv_with_header(&mut out, &SAMPLE_HEADER, &report.samples)?;
    writeln!(out)?;
    write_csv_with_header(&mut out, &PEAK_HEADER, &report.peaks)
}

/// Inverse of [`write_scan_csv`].
pub fn read_scan_csv(text: &str) -> Result<(Vec<SampleRow>, Vec<Peak>), ReportError> {
    let (samples, peaks) = text.split_once("\n\n").unwrap_or((text, ""));
    Ok((read_csv(samples)?, read_csv(peaks)?))
}
