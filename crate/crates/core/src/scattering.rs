//! Scattering of a transverse spherical wave by a homogeneous sphere of
//! complex index `n` and radius `a`.
//!
//! Outside the sphere the field is `A1 h^(1)(kr) + A2 h^(2)(kr)` (outgoing
//! plus incoming), inside it is `B1 j(n k r)`. Continuity of the field and of
//! `(1/r) d(r E)/dr` at `r = a` fixes `A1/A2`. Dividing the matching
//! determinant by `h^(1)(ka) j(nka)` leaves logarithmic derivatives only:
//!
//! ```text
//! A1/A2 = -(h2/h1) G2 / G1,    G_i = h_i'(x)/h_i(x) - n j'(nx)/j(nx),   x = ka
//! ```
//!
//! `G1` is the singularity residual: it vanishes exactly where the
//! reflection coefficient `|A1/A2|^2` diverges.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::DoubleDouble;
use crate::specfun::{self, Argument, BesselOrder, FunctionFamily, Kind, SpecfunError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScatteringError {
    #[error("wavelength must be positive and finite, got {0} nm")]
    InvalidWavelength(f64),
    #[error("sphere radius must be positive and finite, got {0} nm")]
    InvalidRadius(f64),
    #[error("matching denominator vanishes (spectral singularity at this point)")]
    SingularDenominator,
    #[error("{0} vanishes at the sphere surface; its log-derivative has a pole")]
    LogDerivativePole(&'static str),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

/// Sphere radius and the order of the radial functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereGeometry {
    pub radius_nm: f64,
    pub order: BesselOrder,
}

impl SphereGeometry {
    pub fn new(radius_nm: f64, order: BesselOrder) -> Result<Self, ScatteringError> {
        if !(radius_nm.is_finite() && radius_nm > 0.0) {
            return Err(ScatteringError::InvalidRadius(radius_nm));
        }
        Ok(Self { radius_nm, order })
    }

    /// Radius in nm with the default transverse order.
    pub fn with_radius(radius_nm: f64) -> Result<Self, ScatteringError> {
        Self::new(radius_nm, BesselOrder::default())
    }

    pub fn nu(&self) -> f64 {
        self.order.value()
    }
}

/// Complex refractive index `eta + i kappa`; `kappa < 0` is gain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefractiveIndex {
    pub eta: f64,
    pub kappa: f64,
}

impl RefractiveIndex {
    pub fn new(eta: f64, kappa: f64) -> Self {
        Self { eta, kappa }
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.eta, self.kappa)
    }

    /// Within the regime the gain-medium formulas are built for:
    /// `eta > 1` and `|kappa| < 0.1`.
    pub fn is_supported(&self) -> bool {
        self.eta > 1.0 && self.kappa.abs() < 0.1
    }
}

/// Incident wavelength with the derived wavenumber and size parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveInput {
    pub lambda_nm: f64,
    /// `2 pi / lambda`, nm⁻¹.
    pub k: f64,
    size: DoubleDouble,
}

impl WaveInput {
    pub fn new(geom: &SphereGeometry, lambda_nm: f64) -> Result<Self, ScatteringError> {
        if !(lambda_nm.is_finite() && lambda_nm > 0.0) {
            return Err(ScatteringError::InvalidWavelength(lambda_nm));
        }
        let size = DoubleDouble::TWO_PI * geom.radius_nm / lambda_nm;
        Ok(Self {
            lambda_nm,
            k: std::f64::consts::TAU / lambda_nm,
            size,
        })
    }

    /// Size parameter `x = k a`.
    pub fn x(&self) -> f64 {
        self.size.to_f64()
    }

    fn outer(&self) -> Argument {
        Argument::from_dd(self.size, 0.0)
    }

    /// `n x`, with the real part kept in double-double for the phase.
    fn inner(&self, n: &RefractiveIndex) -> Argument {
        Argument::from_dd(self.size * n.eta, n.kappa * self.size.hi)
    }
}

struct Surface {
    n: Complex64,
    outgoing: FunctionFamily,
    interior: FunctionFamily,
}

impl Surface {
    fn new(n: &RefractiveIndex, geom: &SphereGeometry, lambda_nm: f64) -> Result<Self, ScatteringError> {
        let wave = WaveInput::new(geom, lambda_nm)?;
        let nu = geom.nu();
        let outgoing = specfun::family(Kind::H1, nu, wave.outer())?;
        let interior = specfun::family(Kind::J, nu, wave.inner(n))?;
        if interior.center == Complex64::new(0.0, 0.0) {
            return Err(ScatteringError::LogDerivativePole("j_nu(n k a)"));
        }
        if outgoing.center == Complex64::new(0.0, 0.0) {
            return Err(ScatteringError::LogDerivativePole("h_nu^(1)(k a)"));
        }
        Ok(Self {
            n: n.as_complex(),
            outgoing,
            interior,
        })
    }

    fn residual(&self) -> Complex64 {
        self.outgoing.log_derivative() - self.n * self.interior.log_derivative()
    }
}

/// Reflection amplitude `A1/A2` (outgoing over incoming).
pub fn reflection_amplitude(
    n: &RefractiveIndex,
    geom: &SphereGeometry,
    lambda_nm: f64,
) -> Result<Complex64, ScatteringError> {
    let surface = Surface::new(n, geom, lambda_nm)?;
    let wave = WaveInput::new(geom, lambda_nm)?;
    let incoming = specfun::family(Kind::H2, geom.nu(), wave.outer())?;

    let g1 = surface.residual();
    let g2 = incoming.log_derivative() - surface.n * surface.interior.log_derivative();
    if g1.norm() <= f64::EPSILON * f64::EPSILON * g2.norm() {
        return Err(ScatteringError::SingularDenominator);
    }
    Ok(-(incoming.center / surface.outgoing.center) * g2 / g1)
}

/// Reflection coefficient `R = |A1/A2|^2`.
pub fn reflection_coefficient(
    n: &RefractiveIndex,
    geom: &SphereGeometry,
    lambda_nm: f64,
) -> Result<f64, ScatteringError> {
    Ok(reflection_amplitude(n, geom, lambda_nm)?.norm_sqr())
}

/// Mismatch of logarithmic derivatives at the surface, per unit wavenumber:
///
/// `[d/dr ln h^(1)(kr) - d/dr ln j(n k r)]_{r=a} / k`
///
/// built from the symmetric three-term derivative relation. Dimensionless and
/// O(1) away from a root; zero exactly at a spectral singularity. Multiply by
/// `x = ka` for the same quantity in units of `1/a`.
pub fn singularity_residual(
    n: &RefractiveIndex,
    geom: &SphereGeometry,
    lambda_nm: f64,
) -> Result<Complex64, ScatteringError> {
    Ok(Surface::new(n, geom, lambda_nm)?.residual())
}

/// [`singularity_residual`] computed instead from the one-sided relation
/// `u'_nu = u_{nu-1} - (nu+1) u_nu / z`; an independent algebraic route to
/// the same log-derivative difference.
pub fn singularity_residual_one_sided(
    n: &RefractiveIndex,
    geom: &SphereGeometry,
    lambda_nm: f64,
) -> Result<Complex64, ScatteringError> {
    let s = Surface::new(n, geom, lambda_nm)?;
    Ok(s.outgoing.log_derivative_lower() - s.n * s.interior.log_derivative_lower())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom_for_x(x: f64, lambda_nm: f64) -> SphereGeometry {
        SphereGeometry::with_radius(x * lambda_nm / std::f64::consts::TAU).unwrap()
    }

    #[test]
    fn vacuum_sphere_reflects_unity() {
        let n = RefractiveIndex::new(1.0, 0.0);
        for x in [2.0, 12.0, 35.0, 400.0, 37768.0] {
            let geom = geom_for_x(x, 500.0);
            let r = reflection_amplitude(&n, &geom, 500.0).unwrap();
            assert!((r - 1.0).norm() < 1e-12, "x = {x}: {r}");
        }
    }

    #[test]
    fn lossless_sphere_is_unitary() {
        let geom = geom_for_x(5.0, 1000.0);
        let n = RefractiveIndex::new(1.5, 0.0);
        let amp = reflection_amplitude(&n, &geom, 1000.0).unwrap();
        // 50-digit evaluation of the matching conditions.
        let reference = Complex64::new(0.377_126_858_397_450_8, -0.926_161_612_611_572_8);
        assert!((amp - reference).norm() < 1e-12, "{amp}");
        assert!((amp.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vacuum_residual_is_nonzero() {
        let n = RefractiveIndex::new(1.0, 0.0);
        let geom = geom_for_x(40.0, 500.0);
        let f = singularity_residual(&n, &geom, 500.0).unwrap();
        assert!(f.norm() > 0.1);
    }

    #[test]
    fn residual_forms_agree() {
        for (eta, kappa, x) in [
            (1.479, -2e-5, 37768.3),
            (1.5, 0.0, 5.0),
            (3.4, -4e-4, 628.1),
            (2.0, 0.01, 33.0),
        ] {
            let geom = geom_for_x(x, 600.0);
            let n = RefractiveIndex::new(eta, kappa);
            let a = singularity_residual(&n, &geom, 600.0).unwrap();
            let b = singularity_residual_one_sided(&n, &geom, 600.0).unwrap();
            assert!((a - b).norm() <= 1e-10 * a.norm(), "{a} vs {b}");
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(SphereGeometry::with_radius(0.0).is_err());
        let geom = SphereGeometry::with_radius(1e6).unwrap();
        let n = RefractiveIndex::new(1.5, 0.0);
        assert_eq!(
            reflection_coefficient(&n, &geom, -1.0),
            Err(ScatteringError::InvalidWavelength(-1.0))
        );
    }
}
