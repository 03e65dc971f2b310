//! Reflection-coefficient spectra at fixed pump.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SolverError;
use crate::gainmodel::{self, DispersionMode, GainMediumSpec};
use crate::scattering::{reflection_amplitude, ScatteringError, SphereGeometry};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub dispersion: DispersionMode,
    /// Peaks whose refined `R` exceeds this are singularity candidates.
    pub candidate_threshold: f64,
    /// Golden-section bracket width at which a peak is reported.
    pub resolution_nm: f64,
    /// Further bracket narrowing used to test whether `R` keeps growing.
    pub deep_resolution_nm: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            dispersion: DispersionMode::Full,
            candidate_threshold: 1e14,
            resolution_nm: 1e-9,
            deep_resolution_nm: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReflectionSample {
    pub lambda_nm: f64,
    pub amplitude_re: f64,
    pub amplitude_im: f64,
    /// `|A1/A2|^2`.
    pub r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeakKind {
    SingularityCandidate,
    Resonance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Peak {
    pub lambda_nm: f64,
    /// `R` at the reported wavelength.
    pub r: f64,
    /// `R` after the deep refinement (equal to `r` when not refined).
    pub r_refined: f64,
    pub kind: PeakKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub g0_per_cm: f64,
    pub samples: Vec<ReflectionSample>,
    pub peaks: Vec<Peak>,
}

impl ScanResult {
    pub fn candidates(&self) -> impl Iterator<Item = &Peak> {
        self.peaks.iter().filter(|p| p.kind == PeakKind::SingularityCandidate)
    }

    pub fn resonances(&self) -> impl Iterator<Item = &Peak> {
        self.peaks.iter().filter(|p| p.kind == PeakKind::Resonance)
    }
}

struct Spectrum<'a> {
    medium: &'a GainMediumSpec,
    geom: &'a SphereGeometry,
    kappa0: f64,
    dispersion: DispersionMode,
}

impl Spectrum<'_> {
    fn sample(&self, lambda_nm: f64) -> Result<ReflectionSample, SolverError> {
        let n = gainmodel::dispersion_index(lambda_nm, self.medium, self.kappa0, self.dispersion)?;
        let amp = reflection_amplitude(&n, self.geom, lambda_nm)?;
        Ok(ReflectionSample {
            lambda_nm,
            amplitude_re: amp.re,
            amplitude_im: amp.im,
            r: amp.norm_sqr(),
        })
    }

    /// `ln R`; an exactly singular point counts as `+inf`, other failures as `-inf`.
    fn log_r(&self, lambda_nm: f64) -> f64 {
        match self.sample(lambda_nm) {
            Ok(s) => s.r.ln(),
            Err(SolverError::Scattering(ScatteringError::SingularDenominator)) => f64::INFINITY,
            Err(_) => f64::NEG_INFINITY,
        }
    }

    /// Golden-section search for the maximum of `R` on `[lo, hi]`.
    fn golden(&self, mut lo: f64, mut hi: f64, width: f64) -> (f64, f64) {
        const INV_PHI: f64 = 0.618_033_988_749_894_9;
        let mut c = hi - INV_PHI * (hi - lo);
        let mut d = lo + INV_PHI * (hi - lo);
        let (mut fc, mut fd) = (self.log_r(c), self.log_r(d));
        while hi - lo > width && c < d {
            if fc == f64::INFINITY || fd == f64::INFINITY {
                break;
            }
            if fc >= fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - INV_PHI * (hi - lo);
                fc = self.log_r(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + INV_PHI * (hi - lo);
                fd = self.log_r(d);
            }
        }
        if fc >= fd {
            (c, fc)
        } else {
            (d, fd)
        }
    }
}

/// `R(lambda)` on a uniform grid over `window` at pump `g0_per_cm`, with
/// local maxima located and classified.
///
/// With `refine_peaks`, each grid maximum is bracketed by its neighbours and
/// narrowed by golden section to `resolution_nm`, then further to
/// `deep_resolution_nm`. A peak whose `R` is still growing and ends above
/// `candidate_threshold` is a singularity candidate. Without refinement the
/// grid value alone is compared with the threshold.
///
/// Grid points where the amplitude cannot be evaluated are skipped. The
/// result does not depend on the number of worker threads.
pub fn reflection_scan(
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    g0_per_cm: f64,
    window: (f64, f64),
    grid: usize,
    refine_peaks: bool,
    config: &ScanConfig,
) -> Result<ScanResult, SolverError> {
    let (lo, hi) = window;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(SolverError::InvalidScan(format!(
            "window {lo}:{hi} must be positive and ordered"
        )));
    }
    if grid < 2 {
        return Err(SolverError::InvalidScan(format!("grid must be at least 2, got {grid}")));
    }
    if !(g0_per_cm >= 0.0 && g0_per_cm.is_finite()) {
        return Err(SolverError::InvalidScan(format!(
            "g0 must be non-negative, got {g0_per_cm}"
        )));
    }
    let spectrum = Spectrum {
        medium,
        geom,
        kappa0: gainmodel::kappa0_from_gain(g0_per_cm, medium.lambda0_nm),
        dispersion: config.dispersion,
    };

    let step = (hi - lo) / (grid - 1) as f64;
    let samples: Vec<ReflectionSample> = (0..grid)
        .into_par_iter()
        .map(|i| if i == grid - 1 { hi } else { lo + step * i as f64 })
        .filter_map(|lambda| spectrum.sample(lambda).ok())
        .collect();

    let mut peaks: Vec<Peak> = Vec::new();
    let mut add = |peak: Peak| {
        // Neighbouring grid maxima that converge to the same point.
        if let Some(last) = peaks.last_mut() {
            if (peak.lambda_nm - last.lambda_nm).abs() <= 10.0 * config.resolution_nm {
                if peak.r_refined > last.r_refined {
                    *last = peak;
                }
                return;
            }
        }
        peaks.push(peak);
    };

    let maxima: Vec<usize> = (1..samples.len().saturating_sub(1))
        .filter(|&i| {
            let (l, c, r) = (samples[i - 1].r, samples[i].r, samples[i + 1].r);
            c >= l && c >= r && c > (1.0 + 1e-9) * l.min(r)
        })
        .collect();

    let refined: Vec<Peak> = maxima
        .par_iter()
        .map(|&i| {
            let s = samples[i];
            if !refine_peaks {
                let kind = if s.r > config.candidate_threshold {
                    PeakKind::SingularityCandidate
                } else {
                    PeakKind::Resonance
                };
                return Peak {
                    lambda_nm: s.lambda_nm,
                    r: s.r,
                    r_refined: s.r,
                    kind,
                };
            }
            let (a, b) = (samples[i - 1].lambda_nm, samples[i + 1].lambda_nm);
            let (at, log_r) = spectrum.golden(a, b, config.resolution_nm);
            let half = config.resolution_nm;
            let (deep_at, deep_log_r) =
                spectrum.golden((at - half).max(a), (at + half).min(b), config.deep_resolution_nm);
            let (at, log_r) = if log_r.is_finite() {
                (at, log_r)
            } else {
                (deep_at, deep_log_r)
            };
            let r = log_r.exp().max(s.r);
            let r_refined = deep_log_r.exp().max(r);
            let growing = deep_log_r >= log_r;
            let kind = if growing && r_refined > config.candidate_threshold {
                PeakKind::SingularityCandidate
            } else {
                PeakKind::Resonance
            };
            Peak {
                lambda_nm: if kind == PeakKind::SingularityCandidate {
                    deep_at
                } else {
                    at
                },
                r,
                r_refined,
                kind,
            }
        })
        .collect();
    for peak in refined {
        add(peak);
    }

    Ok(ScanResult {
        g0_per_cm,
        samples,
        peaks,
    })
}
