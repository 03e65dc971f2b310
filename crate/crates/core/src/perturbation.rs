//! Closed-form spectral singularities in the large-size, weak-gain limit.
//!
//! Keeping the two leading powers of `x = ka` and first order in `kappa`, the
//! singularity condition reduces to
//!
//! ```text
//! x eta   = pi (m + (nu + 1)/2)
//! x kappa = -ln((eta + 1)/(eta - 1)) / 2
//! ```
//!
//! for integer mode number `m`. Solving for `(kappa, x)` at fixed `eta` gives
//! [`kappa_of_eta_m`] and [`x_of_eta_kappa`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::DoubleDouble;
use crate::scattering::RefractiveIndex;
use crate::specfun::coeff_a;

/// Seeds with `x` below this are not trusted.
pub const MIN_TRUSTED_X: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PerturbationError {
    #[error("eta must exceed 1, got {0}")]
    EtaDomain(f64),
    #[error("mode number must be at least 1")]
    ModeDomain,
    #[error("kappa must be negative (gain), got {0}")]
    KappaDomain(f64),
    #[error("size parameter x = {0} is below the asymptotic regime (x > 100)")]
    SmallSize(f64),
    #[error("tan(n x - pi nu / 2) has a pole at this point")]
    TangentPole,
}

/// An approximate spectral singularity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSeed {
    pub m: u64,
    pub eta: f64,
    pub kappa: f64,
    pub x: f64,
}

impl ModeSeed {
    /// Mode `m` at real index `eta`.
    pub fn new(eta: f64, m: u64, nu: f64) -> Result<Self, PerturbationError> {
        let kappa = kappa_of_eta_m(eta, m, nu)?;
        let x = x_of_eta_kappa(eta, kappa)?;
        Ok(Self { m, eta, kappa, x })
    }

    pub fn index(&self) -> RefractiveIndex {
        RefractiveIndex::new(self.eta, self.kappa)
    }

    pub fn is_trusted(&self) -> bool {
        self.x > MIN_TRUSTED_X
    }
}

fn loss_log(eta: f64) -> Result<f64, PerturbationError> {
    if !(eta > 1.0 && eta.is_finite()) {
        return Err(PerturbationError::EtaDomain(eta));
    }
    Ok(((eta + 1.0) / (eta - 1.0)).ln())
}

/// `kappa = -eta ln((eta+1)/(eta-1)) / (pi (2m + nu + 1))`; always negative.
pub fn kappa_of_eta_m(eta: f64, m: u64, nu: f64) -> Result<f64, PerturbationError> {
    if m == 0 {
        return Err(PerturbationError::ModeDomain);
    }
    let l = loss_log(eta)?;
    Ok(-eta * l / (std::f64::consts::PI * (2.0 * m as f64 + nu + 1.0)))
}

/// `x = -ln((eta+1)/(eta-1)) / (2 kappa)`.
pub fn x_of_eta_kappa(eta: f64, kappa: f64) -> Result<f64, PerturbationError> {
    let l = loss_log(eta)?;
    if !(kappa < 0.0) {
        return Err(PerturbationError::KappaDomain(kappa));
    }
    Ok(-l / (2.0 * kappa))
}

/// `tan(n x - pi nu/2) - [-i n + (n^2 - 1) A_1 / (n x)]`.
///
/// Zero to first order in `1/x` on the exact singularity; the closed-form
/// seeds leave an `O(1/x)` remainder because they drop the `A_1` term.
pub fn tan_condition_residual(n: &RefractiveIndex, x: f64, nu: f64) -> Result<Complex64, PerturbationError> {
    if !(x > MIN_TRUSTED_X) {
        return Err(PerturbationError::SmallSize(x));
    }
    let nc = n.as_complex();
    // Real part of the phase modulo pi in double-double; tan has period pi.
    let re = (DoubleDouble::product(n.eta, x) - DoubleDouble::HALF_PI * nu)
        .rem_pi()
        .to_f64();
    let theta = Complex64::new(re, n.kappa * x);
    let (s, c) = (theta.sin(), theta.cos());
    if c.norm() <= f64::EPSILON * s.norm() {
        return Err(PerturbationError::TangentPole);
    }
    let rhs = -Complex64::i() * nc + (nc * nc - 1.0) * coeff_a(1, nu) / (nc * x);
    Ok(s / c - rhs)
}
