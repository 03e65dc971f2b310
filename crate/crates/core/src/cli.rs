//! `sphsing` command line.
//!
//! Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::gainmodel::MediaCatalog;
use crate::gainmodel::{self, DispersionMode, GainMediumSpec};
use crate::report::{self, MinRadiusRow, OutputFormat, ScanReport, SingularityRow};
use crate::scattering::SphereGeometry;
use crate::solver::{self, ScanConfig, SolverConfig};
use crate::specfun::BesselOrder;
use crate::units::Length;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sphsing",
    version,
    about = "Spectral singularities of a spherical gain medium"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate every singularity under the medium's gain cap.
    Singularities(SingularitiesArgs),
    /// Reflection spectrum at fixed gain, with peak detection.
    Scan(ScanArgs),
    /// Smallest sphere radius that supports a singularity.
    MinRadius(MinRadiusArgs),
    /// Gain-media catalog.
    Media {
        #[command(subcommand)]
        command: MediaCommand,
    },
}

#[derive(Debug, Subcommand)]
enum MediaCommand {
    /// Print the available media.
    List(ListArgs),
}

#[derive(Debug, Args)]
struct MediumArgs {
    /// Medium name from the built-in or user catalog.
    #[arg(long)]
    medium: String,
    /// Additional catalog; entries override built-ins of the same name.
    #[arg(long, value_name = "FILE")]
    catalog: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, default_value = "csv", value_name = "csv|json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct SingularitiesArgs {
    #[command(flatten)]
    medium: MediumArgs,
    /// Sphere radius with unit: mm, um or nm.
    #[arg(long)]
    radius: Length,
    #[arg(long, default_value = "full", value_name = "full|linearized")]
    dispersion: DispersionMode,
    /// Report closed-form seeds only.
    #[arg(long)]
    no_refine: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    medium: MediumArgs,
    #[arg(long)]
    radius: Length,
    /// Gain coefficient in cm^-1; defaults to the first critical value.
    #[arg(long)]
    g0: Option<f64>,
    /// Wavelength window in nm.
    #[arg(long, value_name = "LO:HI")]
    window: Window,
    #[arg(long, default_value_t = 10_000, value_name = "N")]
    grid: usize,
    #[arg(long, default_value = "full", value_name = "full|linearized")]
    dispersion: DispersionMode,
    /// Skip golden-section refinement of peaks.
    #[arg(long)]
    no_refine: bool,
    /// Refined R above which a peak is a singularity candidate.
    #[arg(long, default_value_t = 1e14)]
    threshold: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct MinRadiusArgs {
    #[command(flatten)]
    medium: MediumArgs,
    /// Override the medium's gain cap, cm^-1.
    #[arg(long)]
    g0_max: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long, value_name = "FILE")]
    catalog: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Window(f64, f64);

impl FromStr for Window {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once(':').ok_or("window must be LO:HI in nm")?;
        let parse = |v: &str| v.trim().parse::<f64>().map_err(|_| format!("invalid wavelength `{v}`"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if !(lo > 0.0 && hi > lo && hi.is_finite()) {
            return Err(format!("window {lo}:{hi} must be positive with LO < HI"));
        }
        Ok(Self(lo, hi))
    }
}

enum Failure {
    Config(String),
    Numerical(String),
}

impl From<report::ReportError> for Failure {
    fn from(e: report::ReportError) -> Self {
        Failure::Config(format!("cannot write output: {e}"))
    }
}

fn load_catalog(file: Option<&PathBuf>) -> Result<MediaCatalog, Failure> {
    let mut catalog = MediaCatalog::builtin();
    if let Some(path) = file {
        let user = MediaCatalog::from_file(path).map_err(|e| Failure::Config(e.to_string()))?;
        catalog.merge(user);
    }
    Ok(catalog)
}

fn resolve_medium(args: &MediumArgs) -> Result<GainMediumSpec, Failure> {
    let catalog = load_catalog(args.catalog.as_ref())?;
    catalog.get(&args.medium).cloned().ok_or_else(|| {
        let known: Vec<&str> = catalog.iter().map(|m| m.name.as_str()).collect();
        Failure::Config(format!(
            "unknown medium `{}` (known: {})",
            args.medium,
            known.join(", ")
        ))
    })
}

fn geometry(radius: Length) -> Result<SphereGeometry, Failure> {
    SphereGeometry::new(radius.nm(), BesselOrder::default()).map_err(|e| Failure::Config(e.to_string()))
}

fn singularities(args: &SingularitiesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let medium = resolve_medium(&args.medium)?;
    let geom = geometry(args.radius)?;
    let config = SolverConfig {
        dispersion: args.dispersion,
        ..SolverConfig::default()
    };
    let modes = solver::enumerate_singularities(&medium, &geom, &config, !args.no_refine)
        .map_err(|e| Failure::Numerical(e.to_string()))?;
    let rows = report::singularity_rows(&modes);
    match args.output.format {
        OutputFormat::Csv => report::write_csv_with_header(&mut *out, &report::SINGULARITY_HEADER, &rows)?,
        OutputFormat::Json => report::write_json(&mut *out, &rows)?,
    }
    if rows.is_empty() {
        let min = gainmodel::min_radius(&medium, geom.nu());
        let _ = writeln!(
            err,
            "radius below minimum: {} needs a >= {:.6} mm",
            medium.name,
            min.radius_nm / crate::units::NM_PER_MM
        );
        return Ok(());
    }
    let failed: Vec<&SingularityRow> = rows.iter().filter(|r| r.status.is_failure()).collect();
    if failed.is_empty() {
        return Ok(());
    }
    for (m, e) in modes.failures() {
        let _ = writeln!(err, "mode {m}: {e}");
    }
    Err(Failure::Numerical(format!(
        "{} of {} modes failed to refine",
        failed.len(),
        rows.len()
    )))
}

fn scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let medium = resolve_medium(&args.medium)?;
    let geom = geometry(args.radius)?;
    if args.grid < 2 {
        return Err(Failure::Config(format!("--grid must be at least 2, got {}", args.grid)));
    }
    if !(args.threshold > 0.0) {
        return Err(Failure::Config("--threshold must be positive".into()));
    }
    let g0 = match args.g0 {
        Some(g) if g >= 0.0 && g.is_finite() => g,
        Some(g) => return Err(Failure::Config(format!("--g0 must be non-negative, got {g}"))),
        None => {
            let config = SolverConfig {
                dispersion: args.dispersion,
                ..SolverConfig::default()
            };
            let modes = solver::enumerate_singularities(&medium, &geom, &config, true)
                .map_err(|e| Failure::Numerical(e.to_string()))?;
            let first = modes
                .entries
                .first()
                .ok_or_else(|| Failure::Config("no singularity under the gain cap; pass --g0".into()))?;
            let g = first.best().g0_per_cm;
            let _ = writeln!(err, "using first critical gain g0 = {g} cm^-1 (mode {})", first.seed.m);
            g
        }
    };
    let config = ScanConfig {
        dispersion: args.dispersion,
        candidate_threshold: args.threshold,
        ..ScanConfig::default()
    };
    let result = solver::reflection_scan(
        &medium,
        &geom,
        g0,
        (args.window.0, args.window.1),
        args.grid,
        !args.no_refine,
        &config,
    )
    .map_err(|e| Failure::Numerical(e.to_string()))?;
    if result.samples.is_empty() {
        return Err(Failure::Numerical("no grid point could be evaluated".into()));
    }
    let report = ScanReport::from(&result);
    match args.output.format {
        OutputFormat::Csv => report::write_scan_csv(&mut *out, &report)?,
        OutputFormat::Json => report::write_json(&mut *out, &report)?,
    }
    let _ = writeln!(
        err,
        "{} peaks, {} singularity candidates",
        result.peaks.len(),
        result.candidates().count()
    );
    Ok(())
}

fn min_radius(args: &MinRadiusArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let mut medium = resolve_medium(&args.medium)?;
    if let Some(cap) = args.g0_max {
        medium.g0_max_per_cm = cap;
        medium.validate().map_err(|e| Failure::Config(e.to_string()))?;
    }
    let r = gainmodel::min_radius(&medium, BesselOrder::default().value());
    let row = MinRadiusRow::new(&medium, &r);
    match args.output.format {
        OutputFormat::Csv => report::write_csv(&mut *out, std::slice::from_ref(&row))?,
        OutputFormat::Json => report::write_json(&mut *out, &row)?,
    }
    Ok(())
}

fn media_list(args: &ListArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let catalog = load_catalog(args.catalog.as_ref())?;
    let media: Vec<&GainMediumSpec> = catalog.iter().collect();
    match args.output.format {
        OutputFormat::Csv => report::write_csv(&mut *out, &media)?,
        OutputFormat::Json => report::write_json(&mut *out, &media)?,
    }
    Ok(())
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Singularities(a) => singularities(a, out, err),
        Command::Scan(a) => scan(a, out, err),
        Command::MinRadius(a) => min_radius(a, out),
        Command::Media {
            command: MediaCommand::List(a),
        } => media_list(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Config(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CONFIG
        }
        Err(Failure::Numerical(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NUMERICAL
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        assert_eq!("548.9:549.1".parse::<Window>().unwrap(), Window(548.9, 549.1));
        assert!("549.1:548.9".parse::<Window>().is_err());
        assert!("549".parse::<Window>().is_err());
        assert!("-1:2".parse::<Window>().is_err());
    }
}
