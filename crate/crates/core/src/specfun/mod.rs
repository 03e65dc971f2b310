//! Spherical Bessel and Hankel functions of real, generally non-integer,
//! order and complex argument.
//!
//! Two evaluation routes:
//!
//! * an ascending power series (`|z| <= 45`), summed in double-double;
//! * the large-argument expansion in the coefficients [`coeff_a`]
//!   (`|z| >= 30`), truncated at its smallest term.
//!
//! [`sph_eval`] switches from the first to the second at `|z| = 30`, so the
//! two overlap on `[30, 45]` and can be checked against each other.
//! Derivatives use the three-term relation
//! `u'_nu = [nu u_{nu-1} - (nu+1) u_{nu+1}] / (2 nu + 1)`,
//! which is why everything is evaluated as a family of orders `nu-1, nu, nu+1`.

mod asymptotic;
mod series;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::DoubleDouble;

/// Upper limit of the ascending-series branch.
pub const SERIES_CUTOFF: f64 = 45.0;
/// Lower limit of the asymptotic branch, and the dispatch threshold.
pub const ASYM_CUTOFF: f64 = 30.0;
/// Term cap used by [`sph_eval`] for the asymptotic branch.
pub const DEFAULT_MAX_TERMS: usize = 200;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecfunError {
    #[error("spherical Bessel functions are singular at z = 0")]
    ZeroArgument,
    #[error("non-finite argument {0}")]
    NonFinite(Complex64),
    #[error("|z| = {modulus} is outside the {branch} branch range")]
    OutOfRange { branch: &'static str, modulus: f64 },
    #[error("ascending series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("asymptotic expansion lost accuracy (smallest term {smallest_term:e} relative to the sum)")]
    AccuracyLoss { smallest_term: f64 },
    #[error("nu + 1/2 = {mu} is an integer; the series form of y_nu is undefined there")]
    IntegerOrder { mu: f64 },
}

/// Which solution of the spherical Bessel equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// `j_nu`
    J,
    /// `y_nu`
    Y,
    /// `h_nu^(1) = j_nu + i y_nu`
    H1,
    /// `h_nu^(2) = j_nu - i y_nu`
    H2,
}

/// Order of the spherical Bessel functions describing the transverse field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselOrder(f64);

impl BesselOrder {
    /// `sqrt(5)/2`, the order for the azimuthally polarized spherical wave.
    pub const TRANSVERSE: f64 = 1.118_033_988_749_895;

    pub fn new(nu: f64) -> Option<Self> {
        (nu.is_finite() && nu > 0.0).then_some(Self(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for BesselOrder {
    fn default() -> Self {
        Self(Self::TRANSVERSE)
    }
}

/// A complex argument whose real part may carry an extra double-double tail.
///
/// Only the phase `Re z - pi nu / 2 (mod 2 pi)` uses the tail; magnitudes use
/// the plain f64 value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Argument {
    z: Complex64,
    re_tail: f64,
}

impl Argument {
    pub fn new(z: Complex64) -> Self {
        Self { z, re_tail: 0.0 }
    }

    pub(crate) fn from_dd(re: DoubleDouble, im: f64) -> Self {
        Self {
            z: Complex64::new(re.hi, im),
            re_tail: re.lo,
        }
    }

    pub fn value(&self) -> Complex64 {
        self.z
    }

    pub(crate) fn re_dd(&self) -> DoubleDouble {
        DoubleDouble::new(self.z.re, self.re_tail)
    }

    fn check(&self) -> Result<(), SpecfunError> {
        if !(self.z.re.is_finite() && self.z.im.is_finite()) {
            return Err(SpecfunError::NonFinite(self.z));
        }
        if self.z.re == 0.0 && self.z.im == 0.0 {
            return Err(SpecfunError::ZeroArgument);
        }
        Ok(())
    }
}

impl From<Complex64> for Argument {
    fn from(z: Complex64) -> Self {
        Self::new(z)
    }
}

impl From<f64> for Argument {
    fn from(x: f64) -> Self {
        Self::new(Complex64::new(x, 0.0))
    }
}

/// One kind of function evaluated at orders `nu - 1`, `nu`, `nu + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionFamily {
    pub kind: Kind,
    pub nu: f64,
    pub z: Complex64,
    pub lower: Complex64,
    pub center: Complex64,
    pub upper: Complex64,
}

impl FunctionFamily {
    /// `du_nu/dz` from the symmetric three-term relation.
    pub fn derivative(&self) -> Complex64 {
        (self.lower * self.nu - self.upper * (self.nu + 1.0)) / (2.0 * self.nu + 1.0)
    }

    /// `u'_nu / u_nu` from the symmetric relation.
    pub fn log_derivative(&self) -> Complex64 {
        self.derivative() / self.center
    }

    /// `u'_nu / u_nu` from the one-sided relation
    /// `u'_nu = u_{nu-1} - (nu+1)/z u_nu`. Agrees with
    /// [`log_derivative`](Self::log_derivative) exactly when the family
    /// satisfies `u_{nu-1} + u_{nu+1} = (2nu+1)/z u_nu`.
    pub fn log_derivative_lower(&self) -> Complex64 {
        self.lower / self.center - (self.nu + 1.0) / self.z
    }
}

/// `A_k(nu) = prod_{l=0}^{2k-1} (nu + k - l) / (2^k k!)`.
///
/// Equal to `Gamma(nu+k+1) / (2^k k! Gamma(nu-k+1))`, but the product stays
/// finite where `Gamma(nu-k+1)` has poles.
pub fn coeff_a(k: u32, nu: f64) -> f64 {
    let kf = f64::from(k);
    let mut value = 1.0;
    for l in 0..2 * k {
        value *= nu + kf - f64::from(l);
    }
    for i in 1..=k {
        value /= 2.0 * f64::from(i);
    }
    value
}

fn series_value(kind: Kind, nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    let i = Complex64::i();
    Ok(match kind {
        Kind::J => series::j_series(nu, z)?,
        Kind::Y => series::y_series(nu, z)?,
        Kind::H1 => series::j_series(nu, z)? + i * series::y_series(nu, z)?,
        Kind::H2 => series::j_series(nu, z)? - i * series::y_series(nu, z)?,
    })
}

/// Ascending-series evaluation, valid for `0 < |z| <= 45`.
pub fn sph_bessel_series(kind: Kind, nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    let arg = Argument::new(z);
    arg.check()?;
    if z.norm() > SERIES_CUTOFF {
        return Err(SpecfunError::OutOfRange {
            branch: "series",
            modulus: z.norm(),
        });
    }
    series_value(kind, nu, z)
}

fn asym_at(kind: Kind, nu: f64, arg: &Argument, max_terms: usize) -> Result<Complex64, SpecfunError> {
    let z = arg.value();
    let sums = asymptotic::sums(nu, z, max_terms)?;
    Ok(asymptotic::combine(kind, z, &asymptotic::Phase::new(arg, nu), &sums))
}

/// Large-argument expansion, valid for `|z| >= 30`.
///
/// `max_terms` caps the number of terms of the underlying sequence
/// `A_k / z^k`; summation stops earlier at its smallest term.
pub fn sph_bessel_asym(kind: Kind, nu: f64, z: Complex64, max_terms: usize) -> Result<Complex64, SpecfunError> {
    let arg = Argument::new(z);
    arg.check()?;
    if z.norm() < ASYM_CUTOFF {
        return Err(SpecfunError::OutOfRange {
            branch: "asymptotic",
            modulus: z.norm(),
        });
    }
    asym_at(kind, nu, &arg, max_terms)
}

fn uses_series(z: Complex64) -> bool {
    z.norm() < ASYM_CUTOFF
}

/// Evaluate `u_nu(z)`, choosing the branch by `|z|`.
pub fn sph_eval(kind: Kind, nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    eval_at(kind, nu, &Argument::new(z))
}

pub(crate) fn eval_at(kind: Kind, nu: f64, arg: &Argument) -> Result<Complex64, SpecfunError> {
    arg.check()?;
    if uses_series(arg.value()) {
        series_value(kind, nu, arg.value())
    } else {
        asym_at(kind, nu, arg, DEFAULT_MAX_TERMS)
    }
}

/// `du_nu/dz` via the three-term relation.
pub fn sph_derivative(kind: Kind, nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    Ok(family(kind, nu, z)?.derivative())
}

/// Evaluate `u_{nu-1}, u_nu, u_{nu+1}` at one argument.
///
/// On the asymptotic branch the three orders share one reduced phase, so
/// ratios such as `u_{nu-1}/u_nu` carry no argument-reduction error.
pub fn family(kind: Kind, nu: f64, arg: impl Into<Argument>) -> Result<FunctionFamily, SpecfunError> {
    let arg = arg.into();
    arg.check()?;
    let z = arg.value();
    let [lower, center, upper] = if uses_series(z) {
        [
            series_value(kind, nu - 1.0, z)?,
            series_value(kind, nu, z)?,
            series_value(kind, nu + 1.0, z)?,
        ]
    } else {
        let phase = asymptotic::Phase::new(&arg, nu);
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for (slot, offset) in out.iter_mut().zip([-1i32, 0, 1]) {
            let order = nu + f64::from(offset);
            let sums = asymptotic::sums(order, z, DEFAULT_MAX_TERMS)?;
            *slot = asymptotic::combine(kind, z, &phase.shifted(offset), &sums);
        }
        out
    };
    Ok(FunctionFamily {
        kind,
        nu,
        z,
        lower,
        center,
        upper,
    })
}
