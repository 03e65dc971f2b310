//! Two-level gain medium: complex refractive index versus wavelength, and the
//! closed-form mode wavelengths and threshold gains of a gain sphere.
//!
//! Conventions: wavelengths and radii in nm, gain coefficients in cm⁻¹,
//! `kappa = Im n < 0` for gain. The resonance-wavelength gain coefficient and
//! the imaginary index there are tied by `g0 = -4 pi kappa0 / lambda0`.

mod catalog;

pub use catalog::{CatalogError, MediaCatalog};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scattering::RefractiveIndex;
use crate::units;

/// Above this `|kappa0|` the first-order expansions in `kappa0` degrade.
pub const SMALL_SIGNAL_KAPPA0: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GainModelError {
    #[error("invalid gain medium `{name}`: {reason}")]
    InvalidMedium { name: String, reason: String },
    #[error("n^2 = {0} lies on or across the branch cut of the square root")]
    BranchCut(Complex64),
    #[error("wavelength must be positive, got {0} nm")]
    InvalidWavelength(f64),
}

/// Host index, resonance wavelength, normalized damping and gain cap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GainMediumSpec {
    pub name: String,
    pub n0: f64,
    pub lambda0_nm: f64,
    /// `gamma / omega0`
    pub gamma_hat: f64,
    pub g0_max_per_cm: f64,
}

impl GainMediumSpec {
    /// Semiconductor diode medium: n0 = 3.4, 1500 nm, gamma_hat = 0.02,
    /// g0 up to 1000 cm⁻¹.
    pub fn diode() -> Self {
        Self {
            name: "diode".into(),
            n0: 3.4,
            lambda0_nm: 1500.0,
            gamma_hat: 0.02,
            g0_max_per_cm: 1000.0,
        }
    }

    /// Rose Bengal in DMSO: n0 = 1.479, 549 nm, gamma_hat = 0.062,
    /// g0 up to 5 cm⁻¹.
    pub fn rose_bengal_dmso() -> Self {
        Self {
            name: "rose-bengal-dmso".into(),
            n0: 1.479,
            lambda0_nm: 549.0,
            gamma_hat: 0.062,
            g0_max_per_cm: 5.0,
        }
    }

    pub fn validate(&self) -> Result<(), GainModelError> {
        let fail = |reason: &str| {
            Err(GainModelError::InvalidMedium {
                name: self.name.clone(),
                reason: reason.into(),
            })
        };
        if !(self.n0.is_finite() && self.n0 > 1.0) {
            return fail("n0 must exceed 1");
        }
        if !(self.lambda0_nm.is_finite() && self.lambda0_nm > 0.0) {
            return fail("lambda0 must be positive");
        }
        if !(self.gamma_hat > 0.0 && self.gamma_hat < 1.0) {
            return fail("gamma_hat must lie in (0, 1)");
        }
        if !(self.g0_max_per_cm.is_finite() && self.g0_max_per_cm > 0.0) {
            return fail("g0_max must be positive");
        }
        Ok(())
    }

    /// `ln((n0 + 1)/(n0 - 1))`, the mirror-loss factor of the bare sphere.
    pub fn loss_log(&self) -> f64 {
        ((self.n0 + 1.0) / (self.n0 - 1.0)).ln()
    }
}

/// Pump level: gain coefficient at the resonance wavelength and the
/// corresponding `kappa0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GainState {
    pub g0_per_cm: f64,
    pub kappa0: f64,
}

impl GainState {
    pub fn new(g0_per_cm: f64, medium: &GainMediumSpec) -> Self {
        Self {
            g0_per_cm,
            kappa0: kappa0_from_gain(g0_per_cm, medium.lambda0_nm),
        }
    }

    /// Whether `|kappa0|` is inside the range where first-order expansions
    /// in `kappa0` hold.
    pub fn is_small_signal(&self) -> bool {
        self.kappa0.abs() < SMALL_SIGNAL_KAPPA0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DispersionMode {
    /// Square root of the two-level permittivity.
    #[default]
    Full,
    /// First order in `kappa0`.
    Linearized,
}

impl std::str::FromStr for DispersionMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Self::Full),
            "linearized" => Ok(Self::Linearized),
            other => Err(format!("unknown dispersion mode `{other}` (full|linearized)")),
        }
    }
}

/// `kappa0 = -g0 lambda0 / (4 pi)`, with `g0` in cm⁻¹ and `lambda0` in nm.
pub fn kappa0_from_gain(g0_per_cm: f64, lambda0_nm: f64) -> f64 {
    -units::per_cm_to_per_nm(g0_per_cm) * lambda0_nm / (4.0 * std::f64::consts::PI)
}

/// Inverse of [`kappa0_from_gain`].
pub fn gain_from_kappa0(kappa0: f64, lambda0_nm: f64) -> f64 {
    units::per_nm_to_per_cm(-4.0 * std::f64::consts::PI * kappa0 / lambda0_nm)
}

fn lorentz_denominator(gamma_hat: f64, w: f64) -> f64 {
    let detune = (1.0 - w) * (1.0 + w);
    detune * detune + gamma_hat * gamma_hat * w * w
}

/// Real-index response: `gamma (1 - w^2) / ((1 - w^2)^2 + gamma^2 w^2)`.
pub fn f1(gamma_hat: f64, w: f64) -> f64 {
    gamma_hat * (1.0 - w) * (1.0 + w) / lorentz_denominator(gamma_hat, w)
}

/// Gain-line shape: `gamma^2 w / ((1 - w^2)^2 + gamma^2 w^2)`; equals 1 at `w = 1`.
pub fn f2(gamma_hat: f64, w: f64) -> f64 {
    gamma_hat * gamma_hat * w / lorentz_denominator(gamma_hat, w)
}

/// `((lambda^2 - lambda0^2) / (lambda0 lambda))^2`.
pub fn detuning_factor(lambda_nm: f64, lambda0_nm: f64) -> f64 {
    let r = (lambda_nm - lambda0_nm) * (lambda_nm + lambda0_nm) / (lambda0_nm * lambda_nm);
    r * r
}

/// Complex refractive index of the pumped medium at `lambda_nm`.
///
/// `Full` evaluates `n^2 = n0^2 - wp^2 / (w^2 - 1 + i gamma w)` with
/// `w = lambda0/lambda` and `wp^2 = 2 n0 gamma kappa0`; `Linearized` keeps
/// first order in `kappa0`: `n = n0 + kappa0 (f1 + i f2)`.
pub fn dispersion_index(
    lambda_nm: f64,
    medium: &GainMediumSpec,
    kappa0: f64,
    mode: DispersionMode,
) -> Result<RefractiveIndex, GainModelError> {
    if !(lambda_nm.is_finite() && lambda_nm > 0.0) {
        return Err(GainModelError::InvalidWavelength(lambda_nm));
    }
    let w = medium.lambda0_nm / lambda_nm;
    let g = medium.gamma_hat;
    match mode {
        DispersionMode::Linearized => Ok(RefractiveIndex::new(medium.n0 + kappa0 * f1(g, w), kappa0 * f2(g, w))),
        DispersionMode::Full => {
            let n0 = medium.n0;
            let plasma = 2.0 * n0 * g * kappa0;
            let denom = Complex64::new(-(1.0 - w) * (1.0 + w), g * w);
            let shift = -plasma / denom;
            let n_sq = shift + n0 * n0;
            if n_sq.re <= 0.0 {
                return Err(GainModelError::BranchCut(n_sq));
            }
            // sqrt(n0^2 + s) = n0 + s / (n0 + sqrt(n0^2 + s)) keeps the small
            // correction at full relative precision.
            let n = shift / (n_sq.sqrt() + n0) + n0;
            Ok(RefractiveIndex::new(n.re, n.im))
        }
    }
}

/// Mode wavelength `lambda = 4 n0 a / (2m + nu + 1)`.
pub fn mode_wavelength(m: u64, medium: &GainMediumSpec, a_nm: f64, nu: f64) -> f64 {
    4.0 * medium.n0 * a_nm / (2.0 * m as f64 + nu + 1.0)
}

/// Threshold gain (cm⁻¹) at a given wavelength:
/// `(1/a) ln((n0+1)/(n0-1)) [1 + f(lambda) / gamma^2]`.
pub fn threshold_gain_at(lambda_nm: f64, medium: &GainMediumSpec, a_nm: f64) -> f64 {
    let detune = detuning_factor(lambda_nm, medium.lambda0_nm);
    let g = medium.gamma_hat;
    units::per_nm_to_per_cm(medium.loss_log() / a_nm) * (1.0 + detune / (g * g))
}

/// Threshold gain (cm⁻¹) of mode `m`.
pub fn gain_for_mode(m: u64, medium: &GainMediumSpec, a_nm: f64, nu: f64) -> f64 {
    threshold_gain_at(mode_wavelength(m, medium, a_nm, nu), medium, a_nm)
}

/// Continuous mode index at which the mode wavelength equals `lambda0`.
pub fn resonant_mode_index(medium: &GainMediumSpec, a_nm: f64, nu: f64) -> f64 {
    (4.0 * medium.n0 * a_nm / medium.lambda0_nm - nu - 1.0) / 2.0
}

/// Smallest sphere supporting a spectral singularity under the gain cap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinRadius {
    pub radius_nm: f64,
    /// Limiting mode number.
    pub m: u64,
    pub lambda_nm: f64,
    /// `ln((n0+1)/(n0-1)) / g0_max`: no sphere below this radius can reach
    /// threshold at any wavelength.
    pub envelope_nm: f64,
}

/// Smallest radius `a` for which some integer mode has
/// `gain_for_mode(m, a) <= g0_max`.
///
/// Starts from the continuous bound `a_c = ln((n0+1)/(n0-1)) / g0_max` and,
/// for the integer modes near resonance at `a_c`, finds the smallest feasible
/// radius exactly.
pub fn min_radius(medium: &GainMediumSpec, nu: f64) -> MinRadius {
    let envelope_nm = medium.loss_log() / units::per_cm_to_per_nm(medium.g0_max_per_cm);
    let center = resonant_mode_index(medium, envelope_nm, nu);
    let lo = (center.floor() - 3.0).max(1.0) as u64;
    let hi = (center.ceil() + 3.0).max(1.0) as u64;

    let mut best: Option<MinRadius> = None;
    for m in lo..=hi {
        if let Some(radius_nm) = smallest_feasible_radius(m, medium, nu, envelope_nm) {
            if best.is_none_or(|b| radius_nm < b.radius_nm) {
                best = Some(MinRadius {
                    radius_nm,
                    m,
                    lambda_nm: mode_wavelength(m, medium, radius_nm, nu),
                    envelope_nm,
                });
            }
        }
    }
    best.expect("some mode near resonance is always feasible for large enough radius")
}

/// For mode `m`, write the radius as `a = t a_res` where `a_res` puts the mode
/// on resonance (`t = lambda/lambda0`). Feasibility is
/// `h(t) = beta t - 1 - (t - 1/t)^2 / gamma^2 >= 0` with `beta = a_res / a_c`;
/// `h` is concave with a single maximum, so the smallest root is bracketed by
/// `(0, t_peak]`.
fn smallest_feasible_radius(m: u64, medium: &GainMediumSpec, nu: f64, envelope_nm: f64) -> Option<f64> {
    let a_res = medium.lambda0_nm * (2.0 * m as f64 + nu + 1.0) / (4.0 * medium.n0);
    let beta = a_res / envelope_nm;
    let g2 = medium.gamma_hat * medium.gamma_hat;
    let h = |t: f64| beta * t - 1.0 - (t - 1.0 / t).powi(2) / g2;

    // h'(t) = beta - 2 (t - t^-3) / gamma^2 is strictly decreasing.
    let slope = |t: f64| beta - 2.0 * (t - t.powi(-3)) / g2;
    let (mut lo, mut hi) = (1e-3, 1.0);
    while slope(hi) > 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if slope(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t_peak = 0.5 * (lo + hi);
    if h(t_peak) < 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (t_peak, t_peak);
    while h(lo) >= 0.0 {
        lo *= 0.5;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi * a_res)
}
