//! Spectral-singularity enumeration, exact refinement and reflection scans.
//!
//! Closed-form mode wavelengths and threshold gains give one seed per integer
//! mode under the gain cap. Each seed is refined by damped Newton on the two
//! real equations `Re F = Im F = 0` in the unknowns `(lambda, g0)`, where `F`
//! is [`singularity_residual`] with the index taken from the dispersion model.

mod scan;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gainmodel::{self, DispersionMode, GainMediumSpec, GainModelError};
use crate::perturbation::MIN_TRUSTED_X;
use crate::scattering::{singularity_residual, ScatteringError, SphereGeometry, WaveInput};

pub use scan::{reflection_scan, Peak, PeakKind, ReflectionSample, ScanConfig, ScanResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Perturbative,
    Exact,
}

/// One spectral singularity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSolution {
    pub m: u64,
    pub lambda_nm: f64,
    pub g0_per_cm: f64,
    pub kappa0: f64,
    /// `2 pi a / lambda`.
    pub x: f64,
    /// `|F| / k`, dimensionless.
    pub residual_mag: f64,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("size parameter x = {0} is too small for the asymptotic seeds (need x > 100)")]
    SmallSize(f64),
    #[error("no convergence after {iterations} iterations; best residual {:.3e} at lambda = {} nm", best.residual_mag, best.lambda_nm)]
    NoConvergence { iterations: usize, best: ModeSolution },
    #[error("mode {m} jumped to lambda = {lambda_nm} nm, closer to mode {neighbor}")]
    ModeJump { m: u64, lambda_nm: f64, neighbor: u64 },
    #[error("invalid scan: {0}")]
    InvalidScan(String),
    #[error(transparent)]
    Scattering(#[from] ScatteringError),
    #[error(transparent)]
    GainModel(#[from] GainModelError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub dispersion: DispersionMode,
    /// Convergence threshold on `residual_mag`.
    pub exact_tol: f64,
    /// Convergence threshold on the relative Newton step.
    pub step_tol: f64,
    pub max_iterations: usize,
    pub max_halvings: usize,
    pub fd_lambda_nm: f64,
    pub fd_g0_per_cm: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            dispersion: DispersionMode::Full,
            exact_tol: 1e-10,
            step_tol: 1e-9,
            max_iterations: 50,
            max_halvings: 20,
            fd_lambda_nm: 1e-6,
            fd_g0_per_cm: 1e-8,
        }
    }
}

/// Residual `F/k` at wavelength `lambda_nm` and pump `g0_per_cm`.
pub fn mode_residual(
    lambda_nm: f64,
    g0_per_cm: f64,
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    dispersion: DispersionMode,
) -> Result<Complex64, SolverError> {
    let kappa0 = gainmodel::kappa0_from_gain(g0_per_cm, medium.lambda0_nm);
    let n = gainmodel::dispersion_index(lambda_nm, medium, kappa0, dispersion)?;
    Ok(singularity_residual(&n, geom, lambda_nm)?)
}

fn solution(
    m: u64,
    lambda_nm: f64,
    g0_per_cm: f64,
    residual: Complex64,
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    method: Method,
) -> Result<ModeSolution, SolverError> {
    Ok(ModeSolution {
        m,
        lambda_nm,
        g0_per_cm,
        kappa0: gainmodel::kappa0_from_gain(g0_per_cm, medium.lambda0_nm),
        x: WaveInput::new(geom, lambda_nm)?.x(),
        residual_mag: residual.norm(),
        method,
    })
}

/// Closed-form singularities for every integer mode whose threshold gain is
/// within `medium.g0_max_per_cm`, in increasing `m`.
///
/// `residual_mag` is the exact residual at the seed point under `dispersion`.
pub fn seed_modes(
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    dispersion: DispersionMode,
) -> Result<Vec<ModeSolution>, SolverError> {
    let (a, nu) = (geom.radius_nm, geom.nu());
    let cap = medium.g0_max_per_cm;
    let feasible = |m: u64| m >= 1 && gainmodel::gain_for_mode(m, medium, a, nu) <= cap;

    let center = gainmodel::resonant_mode_index(medium, a, nu).round().max(1.0) as u64;
    // The threshold is convex in lambda around lambda0, so the feasible set
    // is one contiguous run that contains a mode adjacent to resonance.
    let Some(start) = [center, center + 1, center.saturating_sub(1)]
        .into_iter()
        .find(|&m| feasible(m))
    else {
        return Ok(Vec::new());
    };
    let mut lo = start;
    while lo > 1 && feasible(lo - 1) {
        lo -= 1;
    }
    let mut hi = start;
    while feasible(hi + 1) {
        hi += 1;
    }

    (lo..=hi)
        .into_par_iter()
        .map(|m| {
            let lambda = gainmodel::mode_wavelength(m, medium, a, nu);
            let g0 = gainmodel::gain_for_mode(m, medium, a, nu);
            let r = mode_residual(lambda, g0, medium, geom, dispersion)?;
            solution(m, lambda, g0, r, medium, geom, Method::Perturbative)
        })
        .collect()
}

/// Exact root together with the Newton history.
#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub solution: ModeSolution,
    pub iterations: usize,
    /// `residual_mag` at the seed and after each accepted step.
    pub residual_trace: Vec<f64>,
}

/// Refine a seed to an exact singularity.
pub fn refine_mode(
    seed: &ModeSolution,
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    config: &SolverConfig,
) -> Result<ModeSolution, SolverError> {
    refine_mode_traced(seed, medium, geom, config).map(|r| r.solution)
}

pub fn refine_mode_traced(
    seed: &ModeSolution,
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    config: &SolverConfig,
) -> Result<Refinement, SolverError> {
    if !(seed.x > MIN_TRUSTED_X) {
        return Err(SolverError::SmallSize(seed.x));
    }
    let eval = |p: [f64; 2]| mode_residual(p[0], p[1], medium, geom, config.dispersion);
    let (hl, hg) = (config.fd_lambda_nm, config.fd_g0_per_cm);
    let (a, nu) = (geom.radius_nm, geom.nu());
    // Roots of neighbouring modes are one spacing apart; a longer step can
    // land in the wrong basin.
    let spacing =
        gainmodel::mode_wavelength(seed.m, medium, a, nu) - gainmodel::mode_wavelength(seed.m + 1, medium, a, nu);
    let max_dl = 0.25 * spacing;

    let mut p = [seed.lambda_nm, seed.g0_per_cm];
    let mut f = eval(p)?;
    let mut trace = vec![f.norm()];
    let mut converged = false;
    let mut iterations = 0;

    while iterations < config.max_iterations {
        let dl = (eval([p[0] + hl, p[1]])? - eval([p[0] - hl, p[1]])?) / (2.0 * hl);
        let dg = (eval([p[0], p[1] + hg])? - eval([p[0], p[1] - hg])?) / (2.0 * hg);
        let det = dl.re * dg.im - dg.re * dl.im;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let mut step = [
            -(dg.im * f.re - dg.re * f.im) / det,
            -(-dl.im * f.re + dl.re * f.im) / det,
        ];
        if step[0].abs() > max_dl {
            let shrink = max_dl / step[0].abs();
            step = [step[0] * shrink, step[1] * shrink];
        }
        let rel = (step[0] / p[0]).abs().max((step[1] / p[1]).abs());
        if f.norm() <= config.exact_tol && rel < config.step_tol {
            converged = true;
            break;
        }

        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..=config.max_halvings {
            let q = [p[0] + t * step[0], p[1] + t * step[1]];
            if let Ok(fq) = eval(q) {
                if fq.norm() < f.norm() {
                    accepted = Some((q, fq));
                    break;
                }
            }
            t *= 0.5;
        }
        iterations += 1;
        match accepted {
            Some((q, fq)) => {
                p = q;
                f = fq;
                trace.push(f.norm());
            }
            None => {
                // Stuck at the noise floor of the residual.
                converged = f.norm() <= config.exact_tol;
                break;
            }
        }
    }

    let solution = solution(seed.m, p[0], p[1], f, medium, geom, Method::Exact)?;
    if !converged {
        return Err(SolverError::NoConvergence {
            iterations,
            best: solution,
        });
    }
    let own = (p[0] - gainmodel::mode_wavelength(seed.m, medium, a, nu)).abs();
    for neighbor in [seed.m.saturating_sub(1), seed.m + 1] {
        if neighbor == 0 || neighbor == seed.m {
            continue;
        }
        let other = gainmodel::mode_wavelength(neighbor, medium, a, nu);
        if (p[0] - other).abs() < own {
            return Err(SolverError::ModeJump {
                m: seed.m,
                lambda_nm: p[0],
                neighbor,
            });
        }
    }
    Ok(Refinement {
        solution,
        iterations,
        residual_trace: trace,
    })
}

/// A seed and, when refinement was requested, its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeEntry {
    pub seed: ModeSolution,
    pub exact: Option<Result<ModeSolution, SolverError>>,
}

impl ModeEntry {
    /// The refined root if it converged, else the seed.
    pub fn best(&self) -> &ModeSolution {
        match &self.exact {
            Some(Ok(s)) => s,
            _ => &self.seed,
        }
    }

    pub fn error(&self) -> Option<&SolverError> {
        match &self.exact {
            Some(Err(e)) => Some(e),
            _ => None,
        }
    }
}

/// All singularities under the gain cap, sorted by threshold gain.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Enumeration {
    pub entries: Vec<ModeEntry>,
}

impl Enumeration {
    pub fn solutions(&self) -> Vec<ModeSolution> {
        self.entries.iter().map(|e| *e.best()).collect()
    }

    pub fn failures(&self) -> impl Iterator<Item = (u64, &SolverError)> {
        self.entries.iter().filter_map(|e| e.error().map(|err| (e.seed.m, err)))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Seed every mode under the gain cap and optionally refine each one.
/// Refinement failures are recorded per entry; the batch never aborts.
pub fn enumerate_singularities(
    medium: &GainMediumSpec,
    geom: &SphereGeometry,
    config: &SolverConfig,
    refine: bool,
) -> Result<Enumeration, SolverError> {
    let seeds = seed_modes(medium, geom, config.dispersion)?;
    let mut entries: Vec<ModeEntry> = seeds
        .into_par_iter()
        .map(|seed| ModeEntry {
            exact: refine.then(|| refine_mode(&seed, medium, geom, config)),
            seed,
        })
        .collect();
    entries.sort_by(|a, b| {
        a.best()
            .g0_per_cm
            .total_cmp(&b.best().g0_per_cm)
            .then(a.seed.m.cmp(&b.seed.m))
    });
    Ok(Enumeration { entries })
}
